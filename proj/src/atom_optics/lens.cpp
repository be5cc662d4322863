#include "atomlens/atom_optics/lens.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "atomlens/constants.hpp"
#include "atomlens/numkernel/bessel.hpp"

namespace atomlens::atom_optics {

using constants::pi;

void LensPulse::validate() const {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("pulse: duration must be positive");
  }
  if (detuning == 0.0 || !std::isfinite(detuning)) {
    throw std::invalid_argument("pulse: detuning must be non-zero");
  }
  if (!c1 && !field_area) throw std::invalid_argument("pulse: need c1 or field_area");
  if (field_area) {
    if (*field_area == 0.0 || !std::isfinite(*field_area)) {
      throw std::invalid_argument("pulse: field_area must be non-zero");
    }
    if (std::signbit(*field_area) != std::signbit(detuning)) {
      throw std::invalid_argument("pulse: field_area must have the sign of the detuning");
    }
  }
}

double field_area(const LensPulse& pulse, const AtomSpecies& species) {
  species.validate();
  if (!pulse.c1) throw std::invalid_argument("field_area: pulse has no c1");
  if (pulse.detuning == 0.0) throw std::domain_error("field_area: detuning is zero");
  const double k = species.wavenumber();
  const double c1 = *pulse.c1;
  const double gamma = species.linewidth;
  return pulse.duration * k * k * c1 * c1 * gamma * gamma /
         (16.0 * constants::vacuum_impedance * species.saturation_intensity * pulse.detuning);
}

double effective_field_area(const LensPulse& pulse, const AtomSpecies& species) {
  if (pulse.field_area) return *pulse.field_area;
  return field_area(pulse, species);
}

double focal_length(double a, double wavelength, double lambda_d, LensMode mode) {
  if (a == 0.0) throw std::domain_error("focal_length: field area is zero, there is no lens");
  if (!(wavelength > 0.0) || !(lambda_d > 0.0)) {
    throw std::invalid_argument("focal_length: wavelengths must be positive");
  }
  const double factor = mode == LensMode::red ? 2.0 * pi : pi;
  return wavelength * wavelength / (factor * std::abs(a) * lambda_d);
}

Polarity lens_polarity(double a, LensMode mode) {
  const bool converging = mode == LensMode::red ? a < 0.0 : a > 0.0;
  return converging ? Polarity::converging : Polarity::diverging;
}

double aberration_phase(double rho, double f, double lambda_d, double a, double k_light,
                        LensMode mode) {
  if (!(rho >= 0.0)) throw std::invalid_argument("aberration_phase: rho must be >= 0");
  if (!(f > 0.0)) throw std::invalid_argument("aberration_phase: f must be > 0");
  const PhaseModel model = mode == LensMode::red ? PhaseModel::red_j0sq(a, k_light, lambda_d, f)
                                                 : PhaseModel::blue_j1sq(a, k_light, lambda_d, f);
  return model(rho);
}

namespace {

void check_focus(double lambda_d, double f) {
  if (!(lambda_d > 0.0) || !(f > 0.0)) {
    throw std::invalid_argument("phase model: lambda_D and f must be positive");
  }
}

}  // namespace

PhaseModel PhaseModel::red_j0sq(double a, double k_light, double lambda_d, double f) {
  check_focus(lambda_d, f);
  PhaseModel m;
  m.kind_ = PhaseKind::red_j0sq;
  m.fresnel_coeff_ = pi / (lambda_d * f);
  m.field_area_ = a;
  m.k_light_ = k_light;
  return m;
}

PhaseModel PhaseModel::blue_j1sq(double a, double k_light, double lambda_d, double f) {
  PhaseModel m = red_j0sq(a, k_light, lambda_d, f);
  m.kind_ = PhaseKind::blue_j1sq;
  return m;
}

PhaseModel PhaseModel::custom(const IntensityTable& table, const AtomSpecies& species,
                              double detuning, double duration, double lambda_d, double f) {
  check_focus(lambda_d, f);
  if (!(duration > 0.0)) throw std::invalid_argument("phase model: duration must be positive");
  if (table.rho.size() != table.intensity.size() || table.rho.size() < 2) {
    throw std::invalid_argument("phase model: intensity table needs matching rho/intensity columns");
  }
  if (table.rho.front() != 0.0) {
    throw std::invalid_argument("phase model: intensity table must start at rho = 0");
  }
  std::vector<double> potential(table.intensity.size());
  for (std::size_t i = 0; i < potential.size(); ++i) {
    potential[i] = dipole_potential(table.intensity[i], species, detuning);
  }
  PhaseModel m;
  m.kind_ = PhaseKind::custom;
  m.fresnel_coeff_ = pi / (lambda_d * f);
  m.phase_per_joule_ = duration / constants::hbar;
  m.potential_ = std::make_shared<const numkernel::CubicSpline>(table.rho, std::move(potential));
  return m;
}

PhaseModel PhaseModel::ideal() { return PhaseModel{}; }

PhaseModel PhaseModel::free_flight(double lambda_d, double f) {
  check_focus(lambda_d, f);
  PhaseModel m;
  m.kind_ = PhaseKind::free_flight;
  m.fresnel_coeff_ = pi / (lambda_d * f);
  return m;
}

double PhaseModel::fresnel_term(double rho) const { return fresnel_coeff_ * rho * rho; }

double PhaseModel::potential_term(double rho) const {
  switch (kind_) {
    case PhaseKind::red_j0sq: {
      const double j0 = numkernel::bessel_j0(k_light_ * rho);
      return -field_area_ * j0 * j0;
    }
    case PhaseKind::blue_j1sq: {
      const double j1 = numkernel::bessel_j1(k_light_ * rho);
      return -field_area_ * j1 * j1;
    }
    case PhaseKind::custom:
      return -phase_per_joule_ * (*potential_)(rho);
    case PhaseKind::ideal:
    case PhaseKind::free_flight:
      return 0.0;
  }
  return 0.0;
}

double PhaseModel::operator()(double rho) const { return fresnel_term(rho) + potential_term(rho); }

void PhaseModel::evaluate(std::span<const double> rho, std::span<double> phase) const {
  if (rho.size() != phase.size()) throw std::invalid_argument("phase model: span sizes differ");
  if (kind_ != PhaseKind::red_j0sq && kind_ != PhaseKind::blue_j1sq) {
    for (std::size_t i = 0; i < rho.size(); ++i) phase[i] = (*this)(rho[i]);
    return;
  }
  std::vector<double> arg(rho.size()), j0(rho.size()), j1(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) arg[i] = k_light_ * rho[i];
  numkernel::bessel_j0j1(arg, j0, j1);
  const auto& j = kind_ == PhaseKind::red_j0sq ? j0 : j1;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    phase[i] = fresnel_term(rho[i]) - field_area_ * j[i] * j[i];
  }
}

double PhaseModel::curvature_at_axis() const {
  const double fresnel = 2.0 * fresnel_coeff_;
  const double k2 = k_light_ * k_light_;
  switch (kind_) {
    case PhaseKind::red_j0sq:
      // J0^2(x) = 1 - x^2/2 + O(x^4)
      return fresnel + field_area_ * k2;
    case PhaseKind::blue_j1sq:
      // J1^2(x) = x^2/4 + O(x^4)
      return fresnel - 0.5 * field_area_ * k2;
    case PhaseKind::ideal:
      return 0.0;
    case PhaseKind::free_flight:
      return fresnel;
    case PhaseKind::custom:
      break;
  }
  throw std::logic_error("phase model: no analytic curvature for a tabulated potential");
}

double PhaseModel::max_radius() const {
  if (kind_ == PhaseKind::custom) return potential_->x_max();
  return std::numeric_limits<double>::infinity();
}

void LensSetup::validate() const {
  species.validate();
  pulse.validate();
  if (!(aperture_radius > 0.0)) throw std::invalid_argument("lens setup: aperture_radius must be > 0");
  if (!(beam_velocity > 0.0)) throw std::invalid_argument("lens setup: beam_velocity must be > 0");
}

double LensSetup::lambda_d() const { return de_broglie(species, beam_velocity); }

double LensSetup::paraxial_focal_length() const {
  const double a = effective_field_area(pulse, species);
  switch (profile.kind) {
    case PhaseKind::red_j0sq:
      return focal_length(a, species.transition_wavelength, lambda_d(), LensMode::red);
    case PhaseKind::blue_j1sq:
      return focal_length(a, species.transition_wavelength, lambda_d(), LensMode::blue);
    default:
      break;
  }
  throw std::logic_error("lens setup: this potential profile needs an explicit focal length");
}

PhaseModel LensSetup::phase_model(double f) const {
  const double ld = lambda_d();
  switch (profile.kind) {
    case PhaseKind::red_j0sq:
      return PhaseModel::red_j0sq(effective_field_area(pulse, species), species.wavenumber(), ld, f);
    case PhaseKind::blue_j1sq:
      return PhaseModel::blue_j1sq(effective_field_area(pulse, species), species.wavenumber(), ld, f);
    case PhaseKind::custom:
      return PhaseModel::custom(profile.table, species, pulse.detuning, pulse.duration, ld, f);
    case PhaseKind::ideal:
      return PhaseModel::ideal();
    case PhaseKind::free_flight:
      return PhaseModel::free_flight(ld, f);
  }
  return PhaseModel::ideal();
}

}  // namespace atomlens::atom_optics
