#pragma once

#include <span>
#include <stdexcept>

#include "atomlens/atom_optics/wavefield.hpp"

namespace atomlens::atom_optics {

struct SpotMetrics {
  double fwhm = 0.0;                  ///< m, full width through the axis
  double peak_radius = 0.0;           ///< m
  double first_sidelobe_ratio = 0.0;  ///< highest secondary maximum over the main peak
};

/// Base class for the measurement errors below.
class SpotError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The density never falls below one half on the outer side of the peak.
class NoFwhmError : public SpotError {
  using SpotError::SpotError;
};

/// The central lobe is a single sample, so no half-maximum crossing can be
/// bracketed on the grid.
class UnresolvedPeakError : public SpotError {
  using SpotError::SpotError;
};

/// Two separated maxima share the peak value.
class AmbiguousPeakError : public SpotError {
  using SpotError::SpotError;
};

/// Measures a radial density profile sampled on ascending r >= 0. The profile
/// is read as a line cut through a rotationally symmetric spot, so a lobe
/// touching the first sample is mirrored about r = 0.
SpotMetrics spot_metrics(std::span<const double> r, std::span<const double> density);
SpotMetrics spot_metrics(const DensityProfile& profile);

}  // namespace atomlens::atom_optics
