#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atomlens/atom_optics/lens.hpp"
#include "atomlens/numkernel/quadrature.hpp"
#include "atomlens/vector_focus/scan.hpp"

namespace atomlens::cli {

/// Malformed or inconsistent scenario. what() reads
/// "<source>:<line>:<column>: <field>: <reason>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, int line, int column, std::string field, std::string reason);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string source_;
  int line_;
  int column_;
  std::string field_;
  std::string reason_;
};

enum class Mode { field_scan, atom_focus, focal_sweep };

const char* to_string(Mode mode);

enum class FieldQuantity { ex2, ey2, ez2, intensity };

struct PupilEntry {
  std::string label;
  vector_focus::PupilSpec pupil;
  std::string polarization_name;
  std::string apodization_name;
};

struct FieldScanConfig {
  std::vector<PupilEntry> pupils;
  vector_focus::ScanGrid grid;  ///< phi_c stored in radians
  std::vector<FieldQuantity> quantities;
};

struct PulseEntry {
  std::string label;
  atom_optics::LensPulse pulse;
  double focal_length = 0.0;  ///< resolved: explicit or paraxial
  double field_area = 0.0;    ///< effective A
};

enum class AtomReport { density, phase };

struct AtomFocusConfig {
  atom_optics::LensSetup setup;  ///< pulse member unused; see pulses
  std::string profile_name;
  std::vector<PulseEntry> pulses;
  std::vector<double> r;
  double z = 0.0;
  AtomReport report = AtomReport::density;

  atom_optics::LensSetup setup_for(const PulseEntry& entry) const;
};

struct FocalSweepConfig {
  std::vector<atom_optics::AtomSpecies> species;
  double beam_velocity = 0.0;
  std::vector<double> field_areas;  ///< |A| values, positive
  atom_optics::LensMode lens_mode = atom_optics::LensMode::red;
};

struct ScenarioConfig {
  std::string source;
  int version = 1;
  std::string name;
  std::string description;
  Mode mode = Mode::field_scan;
  numkernel::QuadratureSpec quadrature;
  std::variant<FieldScanConfig, AtomFocusConfig, FocalSweepConfig> body;
  std::string canonical;  ///< compact JSON of the effective scenario
  std::uint64_t hash = 0; ///< FNV-1a of `canonical`
};

inline constexpr int kConfigVersion = 1;

/// Parses and validates a scenario. A {"mode": "preset"} document expands to
/// the named built-in preset. Throws ConfigError.
ScenarioConfig parse_config(std::string_view text, std::string_view source = "<config>");

/// Reads a file and parses it. Unreadable files raise ConfigError at line 0.
ScenarioConfig load_config(const std::filesystem::path& path);

std::vector<std::string_view> preset_names();
std::optional<std::string_view> preset_text(std::string_view name);
/// Throws ConfigError for an unknown name.
ScenarioConfig load_preset(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace atomlens::cli
