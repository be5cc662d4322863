#include "atomlens/vector_focus/pupil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace atomlens::vector_focus {

Polarization Polarization::radial() { return Polarization(PolarizationMode::radial); }
Polarization Polarization::azimuthal() { return Polarization(PolarizationMode::azimuthal); }
Polarization Polarization::linear_x() { return Polarization(PolarizationMode::linear_x); }

Polarization Polarization::custom(AngularFunction a, AngularFunction b) {
  if (!a || !b) throw std::invalid_argument("custom polarization: a and b must be callable");
  Polarization p(PolarizationMode::custom);
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  return p;
}

Polarization Polarization::custom_table(numkernel::BilinearGrid a, numkernel::BilinearGrid b) {
  return custom([ga = std::move(a)](double t, double p) { return ga(t, p); },
                [gb = std::move(b)](double t, double p) { return gb(t, p); });
}

Jones Polarization::jones(double theta, double phi) const {
  switch (mode_) {
    case PolarizationMode::radial:
      return {std::cos(phi), std::sin(phi)};
    case PolarizationMode::azimuthal:
      return {std::sin(phi), -std::cos(phi)};
    case PolarizationMode::linear_x:
      return {1.0, 0.0};
    case PolarizationMode::custom:
      return {a_(theta, phi), b_(theta, phi)};
  }
  return {};
}

Apodization Apodization::aplanatic() { return Apodization(ApodizationKind::aplanatic); }
Apodization Apodization::uniform() { return Apodization(ApodizationKind::uniform); }

Apodization Apodization::tabulated(numkernel::LinearTable table) {
  Apodization a(ApodizationKind::tabulated);
  a.table_ = std::make_shared<const numkernel::LinearTable>(std::move(table));
  return a;
}

Apodization Apodization::custom(ComplexAngularFunction b) {
  if (!b) throw std::invalid_argument("custom apodization must be callable");
  Apodization a(ApodizationKind::custom);
  a.custom_ = std::move(b);
  return a;
}

complex Apodization::operator()(double theta, double phi) const {
  switch (kind_) {
    case ApodizationKind::aplanatic:
      return std::sqrt(std::max(0.0, std::cos(theta)));
    case ApodizationKind::uniform:
      return 1.0;
    case ApodizationKind::tabulated:
      return (*table_)(theta);
    case ApodizationKind::custom:
      return custom_(theta, phi);
  }
  return 0.0;
}

void PupilSpec::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw std::invalid_argument("pupil: wavelength must be positive");
  }
  if (!(alpha > 0.0 && alpha <= std::numbers::pi / 2)) {
    throw std::invalid_argument("pupil: alpha must lie in (0, pi/2]");
  }
  if (!(alpha_inner >= 0.0 && alpha_inner < alpha)) {
    throw std::invalid_argument("pupil: alpha_inner must lie in [0, alpha)");
  }
  if (!std::isfinite(amplitude)) throw std::invalid_argument("pupil: amplitude must be finite");
}

double PupilSpec::wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

Vec3 polarization_vector(double theta, double phi, const PupilSpec& pupil) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
    throw std::domain_error("polarization_vector: theta must lie in [0, pi/2]");
  }
  const auto [a, b] = pupil.polarization.jones(theta, phi);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  return {
      a * (ct * cp * cp + sp * sp) + b * (ct * sp * cp - sp * cp),
      a * (ct * cp * sp - sp * cp) + b * (ct * sp * sp + cp * cp),
      -a * st * cp - b * st * sp,
  };
}

}  // namespace atomlens::vector_focus
