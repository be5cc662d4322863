#pragma once

#include <numbers>

namespace atomlens::constants {

inline constexpr double pi = std::numbers::pi;

/// Planck constant, J s (exact, SI 2019).
inline constexpr double planck = 6.62607015e-34;
inline constexpr double hbar = planck / (2.0 * pi);

/// Vacuum impedance as used throughout the lens model (377 ohm, not 376.73).
inline constexpr double vacuum_impedance = 377.0;

}  // namespace atomlens::constants
