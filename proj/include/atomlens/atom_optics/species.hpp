#pragma once

#include <string>

namespace atomlens::atom_optics {

struct AtomSpecies {
  std::string name;
  double mass = 0.0;                  ///< kg
  double transition_wavelength = 0.0; ///< m; also the lens laser wavelength
  double linewidth = 0.0;             ///< natural linewidth Gamma, rad/s
  double saturation_intensity = 0.0;  ///< W/m^2

  void validate() const;
  /// Optical wavenumber 2 pi / transition_wavelength.
  double wavenumber() const;
  /// Recoil frequency hbar k^2 / (2 m), rad/s.
  double recoil_frequency() const;
};

/// 52Cr with the 425 nm line rounded to 0.43 um. Gamma = 2 pi x 5.02 MHz,
/// I_s = 85 W/m^2.
AtomSpecies chromium52();

/// 23Na with the D line rounded to 0.59 um. Gamma = 2 pi x 9.795 MHz,
/// I_s = 62.6 W/m^2.
AtomSpecies sodium23();

/// Looks up "cr52" or "na23"; throws std::invalid_argument otherwise.
AtomSpecies species_preset(const std::string& name);

/// de Broglie wavelength h / (m v).
double de_broglie(const AtomSpecies& species, double velocity);

/// Dipole potential U = hbar Gamma^2 I / (8 Delta I_s), joules. Negative
/// (attractive) for red detuning. Throws std::domain_error for Delta = 0.
double dipole_potential(double intensity, const AtomSpecies& species, double detuning);

}  // namespace atomlens::atom_optics
