#include "atomlens/vector_focus/field.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomlens/constants.hpp"
#include "atomlens/numkernel/bessel.hpp"

namespace atomlens::vector_focus {

namespace {

using numkernel::ConvergenceFailure;
using numkernel::integrate_batch;
using Pair = std::array<complex, 2>;
using Single = std::array<complex, 1>;

constexpr complex kI{0.0, 1.0};

void check_point(const FocalPoint& p) {
  if (!(p.r_t >= 0.0) || !std::isfinite(p.r_t) || !std::isfinite(p.phi_c) || !std::isfinite(p.z)) {
    throw std::invalid_argument("focal point: r_t must be >= 0 and all coordinates finite");
  }
}

void check_reducible(const PupilSpec& pupil, PolarizationMode expected, const char* who) {
  pupil.validate();
  if (pupil.polarization.mode() != expected) {
    throw std::invalid_argument(std::string(who) + ": pupil has the wrong polarization mode");
  }
  if (pupil.apodization.depends_on_phi()) {
    throw std::invalid_argument(std::string(who) +
                                ": apodization depends on phi; use field_general");
  }
}

// Per-panel integrand scratch: Bessel arguments go through the batched kernel.
struct ThetaBatch {
  std::vector<double> arg, j0, j1;
  void resize(std::size_t n) {
    arg.resize(n);
    j0.resize(n);
    j1.resize(n);
  }
};

}  // namespace

FieldSample field_radial(const FocalPoint& point, const PupilSpec& pupil,
                         const QuadratureSpec& quad) {
  check_point(point);
  check_reducible(pupil, PolarizationMode::radial, "field_radial");
  const double k = pupil.wavenumber();
  const double prefactor = 2.0 * std::numbers::pi * pupil.amplitude / pupil.wavelength;
  const double cp = std::cos(point.phi_c);
  const double sp = std::sin(point.phi_c);

  auto assemble = [&](const Pair& integrals, double error) {
    FieldSample s;
    s.ex = prefactor * integrals[1] * cp;
    s.ey = prefactor * integrals[1] * sp;
    s.ez = kI * prefactor * integrals[0];
    s.error = std::abs(prefactor) * error;
    return s;
  };

  ThetaBatch scratch;
  auto fill = [&](std::span<const double> theta, std::span<Pair> out) {
    scratch.resize(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) scratch.arg[i] = k * point.r_t * std::sin(theta[i]);
    numkernel::bessel_j0j1(scratch.arg, scratch.j0, scratch.j1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double st = std::sin(theta[i]);
      const double ct = std::cos(theta[i]);
      const complex weight = pupil.apodization(theta[i], 0.0) *
                             std::exp(kI * (k * point.z * ct));
      out[i] = {weight * (st * st * scratch.j0[i]), weight * (ct * st * scratch.j1[i])};
    }
  };
  try {
    const auto est = integrate_batch<Pair>(fill, pupil.alpha_inner, pupil.alpha, quad);
    return assemble(est.value, est.error);
  } catch (const ConvergenceFailure<Pair>& fail) {
    throw FieldConvergenceFailure(assemble(fail.best_estimate(), fail.achieved_error()),
                                  std::abs(prefactor) * fail.achieved_error(),
                                  std::abs(prefactor) * fail.requested_error());
  }
}

FieldSample field_azimuthal(const FocalPoint& point, const PupilSpec& pupil,
                            const QuadratureSpec& quad) {
  check_point(point);
  check_reducible(pupil, PolarizationMode::azimuthal, "field_azimuthal");
  const double k = pupil.wavenumber();
  const double prefactor = 2.0 * std::numbers::pi * pupil.amplitude / pupil.wavelength;
  const double cp = std::cos(point.phi_c);
  const double sp = std::sin(point.phi_c);

  auto assemble = [&](const Single& integral, double error) {
    FieldSample s;
    s.ex = prefactor * integral[0] * sp;
    s.ey = -prefactor * integral[0] * cp;
    s.ez = 0.0;
    s.error = std::abs(prefactor) * error;
    return s;
  };

  ThetaBatch scratch;
  auto fill = [&](std::span<const double> theta, std::span<Single> out) {
    scratch.resize(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) scratch.arg[i] = k * point.r_t * std::sin(theta[i]);
    numkernel::bessel_j0j1(scratch.arg, scratch.j0, scratch.j1);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double st = std::sin(theta[i]);
      const double ct = std::cos(theta[i]);
      const complex weight = pupil.apodization(theta[i], 0.0) *
                             std::exp(kI * (k * point.z * ct));
      out[i] = {weight * (st * scratch.j1[i])};
    }
  };
  try {
    const auto est = integrate_batch<Single>(fill, pupil.alpha_inner, pupil.alpha, quad);
    return assemble(est.value, est.error);
  } catch (const ConvergenceFailure<Single>& fail) {
    throw FieldConvergenceFailure(assemble(fail.best_estimate(), fail.achieved_error()),
                                  std::abs(prefactor) * fail.achieved_error(),
                                  std::abs(prefactor) * fail.requested_error());
  }
}

FieldSample field_general(const FocalPoint& point, const PupilSpec& pupil,
                          const QuadratureSpec& quad) {
  check_point(point);
  pupil.validate();
  const double k = pupil.wavenumber();
  const complex prefactor = -kI * pupil.amplitude / pupil.wavelength;

  auto assemble = [&](const CVec3& integral, double error) {
    FieldSample s;
    s.ex = prefactor * integral[0];
    s.ey = prefactor * integral[1];
    s.ez = prefactor * integral[2];
    s.error = std::abs(prefactor) * error;
    return s;
  };

  auto fill = [&](double theta, std::span<const double> phis, std::span<CVec3> out) {
    const double st = std::sin(theta);
    const double ct = std::cos(theta);
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const double phi = phis[i];
      const Vec3 p = polarization_vector(theta, phi, pupil);
      const double kappa = point.z * ct + point.r_t * st * std::cos(phi - point.phi_c);
      const complex w = pupil.apodization(theta, phi) * std::exp(kI * (k * kappa)) * st;
      out[i] = {w * p[0], w * p[1], w * p[2]};
    }
  };
  const numkernel::Rectangle domain{pupil.alpha_inner, pupil.alpha, 0.0, 2.0 * std::numbers::pi};
  try {
    const auto est = numkernel::integrate_batch_2d<CVec3>(fill, domain, quad);
    return assemble(est.value, est.error);
  } catch (const ConvergenceFailure<CVec3>& fail) {
    throw FieldConvergenceFailure(assemble(fail.best_estimate(), fail.achieved_error()),
                                  std::abs(prefactor) * fail.achieved_error(),
                                  std::abs(prefactor) * fail.requested_error());
  }
}

FieldSample evaluate_field(const FocalPoint& point, const PupilSpec& pupil,
                           const QuadratureSpec& quad) {
  if (!pupil.apodization.depends_on_phi()) {
    if (pupil.polarization.mode() == PolarizationMode::radial) return field_radial(point, pupil, quad);
    if (pupil.polarization.mode() == PolarizationMode::azimuthal) {
      return field_azimuthal(point, pupil, quad);
    }
  }
  return field_general(point, pupil, quad);
}

double intensity(const FieldSample& s) {
  return (std::norm(s.ex) + std::norm(s.ey) + std::norm(s.ez)) / (2.0 * constants::vacuum_impedance);
}

double annular_limit_intensity(double r_t, double wavelength, double c1, RimMode mode,
                               RimProfile profile) {
  if (!(r_t >= 0.0)) throw std::invalid_argument("annular_limit_intensity: r_t must be >= 0");
  if (!(wavelength > 0.0)) throw std::invalid_argument("annular_limit_intensity: wavelength must be > 0");
  const double eta = constants::vacuum_impedance;
  const double kr = 2.0 * std::numbers::pi / wavelength * r_t;
  const double scale = 2.0 / eta * std::pow(c1 * std::numbers::pi / wavelength, 2);
  if (mode == RimMode::radial) {
    if (profile == RimProfile::parabola) return scale * (1.0 - 0.5 * kr * kr);
    const double j0 = numkernel::bessel_j0(kr);
    return scale * j0 * j0;
  }
  if (profile == RimProfile::parabola) return scale * 0.25 * kr * kr;
  const double j1 = numkernel::bessel_j1(kr);
  return scale * j1 * j1;
}

double annular_rim_intensity(double r_t, double wavelength, double c1, RimMode mode,
                             double rim_width, const QuadratureSpec& quad) {
  if (!(rim_width > 0.0 && rim_width < std::numbers::pi / 2)) {
    throw std::invalid_argument("annular_rim_intensity: rim_width must lie in (0, pi/2)");
  }
  PupilSpec pupil;
  pupil.wavelength = wavelength;
  pupil.alpha = std::numbers::pi / 2;
  pupil.alpha_inner = std::numbers::pi / 2 - rim_width;
  pupil.apodization = Apodization::uniform();
  const double lo = pupil.alpha_inner;
  const double hi = pupil.alpha;
  // Closed-form integrals of the on-axis weights sin^2 t and sin t over the rim.
  const double weight = mode == RimMode::radial
                            ? 0.5 * (hi - lo) - 0.25 * (std::sin(2.0 * hi) - std::sin(2.0 * lo))
                            : std::cos(lo) - std::cos(hi);
  pupil.amplitude = c1 / weight;
  const FocalPoint point{r_t, 0.0, 0.0};
  if (mode == RimMode::radial) {
    pupil.polarization = Polarization::radial();
    return intensity(field_radial(point, pupil, quad));
  }
  pupil.polarization = Polarization::azimuthal();
  return intensity(field_azimuthal(point, pupil, quad));
}

}  // namespace atomlens::vector_focus
