#pragma once

#include "atomlens/numkernel/quadrature.hpp"
#include "atomlens/vector_focus/pupil.hpp"

namespace atomlens::vector_focus {

using numkernel::QuadratureSpec;

/// Thrown by the field evaluators when quadrature fails; carries the best
/// field estimate.
using FieldConvergenceFailure = numkernel::ConvergenceFailure<FieldSample>;

/// Radially polarized pupil, reduced to the two theta integrals
///   I0 = int B sin^2(t) J0(k r sin t) e^{ikz cos t} dt,
///   I1 = int B cos(t) sin(t) J1(k r sin t) e^{ikz cos t} dt
/// over [alpha_inner, alpha]; E = (2 pi C / lambda) (I1 cos phi, I1 sin phi, i I0).
FieldSample field_radial(const FocalPoint& point, const PupilSpec& pupil,
                         const QuadratureSpec& quad = {});

/// Azimuthally polarized pupil, I1 = int B sin(t) J1(k r sin t) e^{ikz cos t} dt;
/// E = (2 pi C / lambda) (I1 sin phi, -I1 cos phi, 0). Ez is exactly zero.
FieldSample field_azimuthal(const FocalPoint& point, const PupilSpec& pupil,
                            const QuadratureSpec& quad = {});

/// Full Debye integral
///   E = -(i C / lambda) int int P(t, p) B(t, p) e^{ik kappa} sin t dt dp,
///   kappa = z cos t + r sin t cos(p - phi_c),
/// for any pupil, including custom polarizations and phi-dependent B.
FieldSample field_general(const FocalPoint& point, const PupilSpec& pupil,
                          const QuadratureSpec& quad = {});

/// Picks the reduced form for radial and azimuthal pupils whose apodization
/// does not depend on phi, and field_general otherwise.
FieldSample evaluate_field(const FocalPoint& point, const PupilSpec& pupil,
                           const QuadratureSpec& quad = {});

/// (|Ex|^2 + |Ey|^2 + |Ez|^2) / (2 eta), eta = 377 ohm.
double intensity(const FieldSample& sample);

enum class RimMode { radial, azimuthal };

/// exact: J0^2 / J1^2 profiles; parabola: the near-axis quadratic forms.
enum class RimProfile { exact, parabola };

/// Closed-form focal-plane intensity of a thin-rim annular pupil at
/// alpha -> 90 degrees:
///   radial:    (2/eta) (C1 pi/lambda)^2 J0^2(k r)   [parabola: 1 - (k r)^2 / 2]
///   azimuthal: (2 pi^2 C1^2 / (lambda^2 eta)) J1^2(k r)   [parabola: (k r)^2 / 4]
double annular_limit_intensity(double r_t, double wavelength, double c1, RimMode mode,
                               RimProfile profile = RimProfile::exact);

/// Numerical counterpart of annular_limit_intensity: uniform pupil on
/// [pi/2 - rim_width, pi/2] with C chosen so that C * int(weight) = C1.
double annular_rim_intensity(double r_t, double wavelength, double c1, RimMode mode,
                             double rim_width, const QuadratureSpec& quad = {});

}  // namespace atomlens::vector_focus
