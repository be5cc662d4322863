#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "atomlens/cli/config.hpp"
#include "atomlens/cli/table.hpp"

namespace atomlens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitWarn = 1;        ///< validate: at least one diagnostic warned
inline constexpr int kExitConfig = 2;      ///< malformed config or bad arguments
inline constexpr int kExitQuadrature = 3;  ///< run: some samples did not converge
inline constexpr int kExitRuntime = 4;     ///< I/O or other unexpected failure

std::string_view tool_version();

struct RunResult {
  ResultTable table;
  std::size_t samples = 0;
  std::size_t failed_samples = 0;

  int exit_code() const { return failed_samples ? kExitQuadrature : kExitOk; }
};

/// Evaluates a scenario. Output bytes depend only on the config and the
/// tool version, never on `threads`.
RunResult run_scenario(const ScenarioConfig& config, unsigned threads);

struct ValidationReport {
  std::vector<std::string> lines;
  bool warned = false;

  int exit_code() const { return warned ? kExitWarn : kExitOk; }
};

/// Physical validity diagnostics without evaluating any field.
ValidationReport validate_scenario(const ScenarioConfig& config);

// Command entry points. Results go to `out_path` or, when empty, to `out`;
// messages go to `err`. Each returns the process exit code.
int command_run(const std::string& config_path, const std::optional<std::string>& out_path,
                std::optional<unsigned> threads, std::ostream& out, std::ostream& err);
int command_validate(const std::string& config_path, std::ostream& out, std::ostream& err);
int command_preset(const std::string& name, const std::optional<std::string>& out_path,
                   std::optional<unsigned> threads, std::ostream& out, std::ostream& err);

}  // namespace atomlens::cli
