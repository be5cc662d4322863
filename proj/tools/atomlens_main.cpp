#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "atomlens/cli/config.hpp"
#include "atomlens/cli/runner.hpp"

int main(int argc, char** argv) {
  using namespace atomlens::cli;

  CLI::App app{"Vectorial focusing and pulsed atom-lens calculator"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string config_path, out_path, preset_name;
  unsigned threads = 0;

  auto* run = app.add_subcommand("run", "Evaluate a scenario config and write CSV");
  run->add_option("config", config_path, "Scenario config (JSON)")->required();
  run->add_option("--out,-o", out_path, "Output CSV path (default: stdout)");
  auto* run_threads = run->add_option("--threads,-j", threads, "Worker threads (default: $ATOMLENS_THREADS or all cores)")
                          ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Check a config and report validity diagnostics");
  validate->add_option("config", config_path, "Scenario config (JSON)")->required();

  auto* preset = app.add_subcommand("preset", "Run a built-in figure preset");
  std::string names;
  for (auto n : preset_names()) names += (names.empty() ? "" : ", ") + std::string(n);
  preset->add_option("name", preset_name, "One of: " + names)->required();
  preset->add_option("--out,-o", out_path, "Output CSV path (default: stdout)");
  auto* preset_threads = preset->add_option("--threads,-j", threads, "Worker threads")
                             ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  auto out = out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
  if (*run) {
    const auto t = run_threads->count() ? std::optional<unsigned>(threads) : std::nullopt;
    return command_run(config_path, out, t, std::cout, std::cerr);
  }
  if (*validate) return command_validate(config_path, std::cout, std::cerr);
  const auto t = preset_threads->count() ? std::optional<unsigned>(threads) : std::nullopt;
  return command_preset(preset_name, out, t, std::cout, std::cerr);
}
