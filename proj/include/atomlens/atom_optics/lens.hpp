#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "atomlens/atom_optics/species.hpp"
#include "atomlens/numkernel/interpolation.hpp"

namespace atomlens::atom_optics {

/// Optical pulse forming the lens. The field area is normally derived from
/// (duration, detuning, c1); `field_area` overrides it.
struct LensPulse {
  double duration = 0.0;  ///< tau, s
  double detuning = 0.0;  ///< Delta, rad/s; < 0 red, > 0 blue
  std::optional<double> c1;          ///< rim field constant, V/m
  std::optional<double> field_area;  ///< dimensionless, signed

  /// Requires duration > 0, detuning != 0, and c1 or field_area. An explicit
  /// field area must carry the sign of the detuning.
  void validate() const;
};

/// A = tau k^2 C1^2 Gamma^2 / (16 eta I_s Delta). Ignores any override;
/// throws std::invalid_argument if c1 is missing.
double field_area(const LensPulse& pulse, const AtomSpecies& species);

/// The override when present, otherwise field_area().
double effective_field_area(const LensPulse& pulse, const AtomSpecies& species);

/// red: attractive J0^2 potential of a radial rim; blue: repulsive J1^2
/// potential of an azimuthal rim.
enum class LensMode { red, blue };

enum class Polarity { converging, diverging };

/// Paraxial focal length from the quadratic term of the potential:
///   red:  lambda^2 / (2 pi |A| lambda_D),  blue: lambda^2 / (pi |A| lambda_D).
/// Throws std::domain_error for A = 0 (no lens).
double focal_length(double field_area, double wavelength, double lambda_d, LensMode mode);

/// Converging when the potential bends phase fronts toward the axis: A < 0
/// for red, A > 0 for blue.
Polarity lens_polarity(double field_area, LensMode mode);

/// Phi(rho) = pi rho^2 / (lambda_D f) - A J0^2(k rho)  (red)
///          = pi rho^2 / (lambda_D f) - A J1^2(k rho)  (blue)
double aberration_phase(double rho, double f, double lambda_d, double field_area,
                        double k_light, LensMode mode);

/// Radial intensity profile of a custom light potential, W/m^2 vs meters.
struct IntensityTable {
  std::vector<double> rho;
  std::vector<double> intensity;
};

enum class PhaseKind { red_j0sq, blue_j1sq, custom, ideal, free_flight };

/// Aberration function Phi(rho) seen by the atoms across the aperture.
class PhaseModel {
 public:
  static PhaseModel red_j0sq(double field_area, double k_light, double lambda_d, double f);
  static PhaseModel blue_j1sq(double field_area, double k_light, double lambda_d, double f);
  /// Phi = pi rho^2/(lambda_D f) - U(rho) tau / hbar with U from the table
  /// through dipole_potential, cubic-spline interpolated.
  static PhaseModel custom(const IntensityTable& table, const AtomSpecies& species,
                           double detuning, double duration, double lambda_d, double f);
  /// Perfect lens: Phi == 0.
  static PhaseModel ideal();
  /// No potential: only the Fresnel term.
  static PhaseModel free_flight(double lambda_d, double f);

  PhaseKind kind() const { return kind_; }

  double operator()(double rho) const;
  /// Batched Phi; Bessel factors go through the SIMD kernel.
  void evaluate(std::span<const double> rho, std::span<double> phase) const;

  /// pi rho^2 / (lambda_D f), or 0 for the ideal lens.
  double fresnel_term(double rho) const;
  /// -U(rho) tau / hbar, i.e. -A J0^2(k rho) for the red profile.
  double potential_term(double rho) const;

  /// d^2 Phi / d rho^2 at rho = 0 from the analytic Taylor coefficients.
  /// Throws std::logic_error for custom profiles.
  double curvature_at_axis() const;

  /// Largest rho covered by the model (custom tables only; infinity otherwise).
  double max_radius() const;

 private:
  PhaseKind kind_ = PhaseKind::ideal;
  double fresnel_coeff_ = 0.0;  // pi / (lambda_D f)
  double field_area_ = 0.0;
  double k_light_ = 0.0;
  double phase_per_joule_ = 0.0;  // tau / hbar
  std::shared_ptr<const numkernel::CubicSpline> potential_;
};

/// Potential shape driving the lens in a LensSetup.
struct PotentialProfile {
  PhaseKind kind = PhaseKind::red_j0sq;
  IntensityTable table;  ///< used when kind == custom
};

struct LensSetup {
  AtomSpecies species;
  LensPulse pulse;
  double aperture_radius = 0.0;  ///< a, m
  double beam_velocity = 0.0;    ///< V1, m/s
  PotentialProfile profile;

  void validate() const;
  double lambda_d() const;
  /// Paraxial focal length for the red/blue profiles. Throws
  /// std::logic_error for the other kinds, which need an explicit f.
  double paraxial_focal_length() const;
  PhaseModel phase_model(double f) const;
};

}  // namespace atomlens::atom_optics
