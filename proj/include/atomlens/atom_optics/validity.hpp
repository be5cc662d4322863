#pragma once

#include <string>
#include <vector>

#include "atomlens/atom_optics/lens.hpp"

namespace atomlens::atom_optics {

enum class DiagnosticStatus { pass, warn };

struct Diagnostic {
  std::string name;
  double ratio = 0.0;
  double threshold = 0.0;
  bool lower_bound = false;  ///< true when ratio must be >= threshold
  DiagnosticStatus status = DiagnosticStatus::pass;
  std::string description;
};

// Threshold values.
inline constexpr double kMinDetuningOverLinewidth = 10.0;
inline constexpr double kMaxPulseTimesRecoil = 0.1;
inline constexpr double kMaxApertureOverFocus = 0.2;
inline constexpr double kMaxObservationOverFocus = 1e-2;

/// Checks far detuning, short pulse, small angular aperture and small
/// observation radius. Never throws for a setup that passes validate().
std::vector<Diagnostic> validity_check(const LensSetup& setup, double f, double max_r_observation);

bool all_pass(const std::vector<Diagnostic>& diagnostics);

const char* to_string(DiagnosticStatus status);

}  // namespace atomlens::atom_optics
