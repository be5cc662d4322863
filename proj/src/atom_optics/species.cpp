#include "atomlens/atom_optics/species.hpp"

#include <cmath>
#include <stdexcept>

#include "atomlens/constants.hpp"

namespace atomlens::atom_optics {

namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void AtomSpecies::validate() const {
  if (!positive(mass) || !positive(transition_wavelength) || !positive(linewidth) ||
      !positive(saturation_intensity)) {
    throw std::invalid_argument("species '" + name + "': all parameters must be positive");
  }
}

double AtomSpecies::wavenumber() const { return 2.0 * constants::pi / transition_wavelength; }

double AtomSpecies::recoil_frequency() const {
  const double k = wavenumber();
  return constants::hbar * k * k / (2.0 * mass);
}

AtomSpecies chromium52() {
  return {"cr52", 8.68e-26, 0.43e-6, 2.0 * constants::pi * 5.02e6, 85.0};
}

AtomSpecies sodium23() {
  return {"na23", 3.84e-26, 0.59e-6, 2.0 * constants::pi * 9.795e6, 62.6};
}

AtomSpecies species_preset(const std::string& name) {
  if (name == "cr52") return chromium52();
  if (name == "na23") return sodium23();
  throw std::invalid_argument("unknown species preset '" + name + "' (expected cr52 or na23)");
}

double de_broglie(const AtomSpecies& species, double velocity) {
  species.validate();
  if (!positive(velocity)) throw std::invalid_argument("de_broglie: velocity must be positive");
  return constants::planck / (species.mass * velocity);
}

double dipole_potential(double intensity, const AtomSpecies& species, double detuning) {
  species.validate();
  if (detuning == 0.0 || !std::isfinite(detuning)) {
    throw std::domain_error("dipole_potential: detuning must be non-zero and finite");
  }
  const double gamma = species.linewidth;
  return constants::hbar * gamma * gamma * intensity / (8.0 * detuning * species.saturation_intensity);
}

}  // namespace atomlens::atom_optics
