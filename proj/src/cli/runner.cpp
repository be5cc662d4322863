#include "atomlens/cli/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "atomlens/atom_optics/spot.hpp"
#include "atomlens/atom_optics/validity.hpp"
#include "atomlens/atom_optics/wavefield.hpp"
#include "atomlens/constants.hpp"
#include "atomlens/numkernel/parallel.hpp"
#include "atomlens/vector_focus/scan.hpp"

namespace atomlens::cli {

namespace ao = atom_optics;
namespace vf = vector_focus;

std::string_view tool_version() { return ATOMLENS_VERSION; }

namespace {

std::string fmt(double v) { return format_double(v); }

std::string short_fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string hash_hex(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void add_preamble(ResultTable& t, const ScenarioConfig& c) {
  t.add_header_comment("atomlens " + std::string(tool_version()));
  if (!c.name.empty()) t.add_header_comment("scenario: " + c.name);
  t.add_header_comment(std::string("mode: ") + to_string(c.mode));
  if (!c.description.empty()) t.add_header_comment("description: " + c.description);
}

void add_provenance(ResultTable& t, const ScenarioConfig& c, const RunResult& r) {
  t.add_footer_comment("config_hash: fnv1a64:" + hash_hex(c.hash));
  t.add_footer_comment("tool_version: atomlens " + std::string(tool_version()));
  if (r.failed_samples == 0) {
    t.add_footer_comment("status: ok");
  } else {
    t.add_footer_comment("status: quadrature_failure (" + std::to_string(r.failed_samples) +
                         " of " + std::to_string(r.samples) + " samples did not converge)");
  }
}

const char* quantity_name(FieldQuantity q) {
  switch (q) {
    case FieldQuantity::ex2: return "ex2";
    case FieldQuantity::ey2: return "ey2";
    case FieldQuantity::ez2: return "ez2";
    case FieldQuantity::intensity: return "intensity";
  }
  return "?";
}

const char* quantity_unit(FieldQuantity q) {
  return q == FieldQuantity::intensity ? "W/m^2" : "V^2/m^2";
}

double quantity_value(FieldQuantity q, const vf::FieldSample& s) {
  switch (q) {
    case FieldQuantity::ex2: return std::norm(s.ex);
    case FieldQuantity::ey2: return std::norm(s.ey);
    case FieldQuantity::ez2: return std::norm(s.ez);
    case FieldQuantity::intensity: return vf::intensity(s);
  }
  return 0.0;
}

void run_field_scan(const ScenarioConfig& c, const FieldScanConfig& fs, unsigned threads,
                    RunResult& r) {
  ResultTable& t = r.table;
  constexpr double deg = 180.0 / constants::pi;
  std::vector<vf::FieldMap> maps;
  for (const PupilEntry& p : fs.pupils) {
    t.add_header_comment("pupil " + p.label + ": wavelength=" + fmt(p.pupil.wavelength) +
                         " m, alpha=" + fmt(p.pupil.alpha * deg) + " deg, alpha_inner=" +
                         fmt(p.pupil.alpha_inner * deg) + " deg, polarization=" +
                         p.polarization_name + ", apodization=" + p.apodization_name);
    maps.push_back(vf::scan_field(fs.grid, p.pupil, c.quadrature, threads));
  }

  t.add_column("r_t", "m");
  t.add_column("phi_c", "deg");
  t.add_column("z", "m");
  for (const PupilEntry& p : fs.pupils) {
    for (FieldQuantity q : fs.quantities) t.add_column(p.label + "." + quantity_name(q), quantity_unit(q));
  }
  for (const PupilEntry& p : fs.pupils) t.add_column(p.label + ".converged", "1");

  const vf::ScanGrid& g = fs.grid;
  std::vector<std::vector<char>> ok(maps.size());
  for (std::size_t m = 0; m < maps.size(); ++m) {
    ok[m].assign(maps[m].samples.size(), 1);
    for (const auto& f : maps[m].failures) ok[m][maps[m].index(f.ir, f.iphi, f.iz)] = 0;
    r.failed_samples += maps[m].failures.size();
    r.samples += maps[m].samples.size();
  }

  for (std::size_t iz = 0; iz < g.z.size(); ++iz) {
    for (std::size_t ip = 0; ip < g.phi_c.size(); ++ip) {
      for (std::size_t ir = 0; ir < g.r_t.size(); ++ir) {
        std::vector<double> row{g.r_t[ir], g.phi_c[ip] * deg, g.z[iz]};
        for (const auto& map : maps) {
          for (FieldQuantity q : fs.quantities) row.push_back(quantity_value(q, map.at(ir, ip, iz)));
        }
        for (std::size_t m = 0; m < maps.size(); ++m) {
          row.push_back(ok[m][maps[m].index(ir, ip, iz)] ? 1.0 : 0.0);
        }
        t.add_row(std::move(row));
      }
    }
  }

  for (std::size_t m = 0; m < maps.size(); ++m) {
    const auto& map = maps[m];
    std::string line = fs.pupils[m].label + ":";
    double peak_ex2 = 0.0, peak_ez2 = 0.0;
    for (FieldQuantity q : fs.quantities) {
      double best = -1.0;
      std::size_t at = 0;
      for (std::size_t i = 0; i < map.samples.size(); ++i) {
        const double v = quantity_value(q, map.samples[i]);
        if (v > best) {
          best = v;
          at = i;
        }
      }
      const std::size_t nr = g.r_t.size();
      line += std::string(" peak ") + quantity_name(q) + "=" + fmt(best) + " at r_t=" +
              fmt(g.r_t[at % nr]) + " m;";
    }
    for (const auto& s : map.samples) {
      peak_ex2 = std::max(peak_ex2, std::norm(s.ex));
      peak_ez2 = std::max(peak_ez2, std::norm(s.ez));
    }
    if (peak_ez2 > 0.0) line += " peak_ex2/peak_ez2=" + fmt(peak_ex2 / peak_ez2);
    t.add_footer_comment(line);
  }
}

void run_atom_focus(const ScenarioConfig& c, const AtomFocusConfig& af, unsigned threads,
                    RunResult& r) {
  ResultTable& t = r.table;
  t.add_header_comment("species " + af.setup.species.name + ": mass=" + fmt(af.setup.species.mass) +
                       " kg, transition_wavelength=" + fmt(af.setup.species.transition_wavelength) +
                       " m");
  t.add_header_comment("beam_velocity=" + fmt(af.setup.beam_velocity) + " m/s, aperture_radius=" +
                       fmt(af.setup.aperture_radius) + " m, profile=" + af.profile_name +
                       ", lambda_D=" + fmt(af.setup.lambda_d()) + " m");
  for (const PulseEntry& p : af.pulses) {
    t.add_header_comment("pulse " + p.label + ": A=" + fmt(p.field_area) + ", f=" +
                         fmt(p.focal_length) + " m, tau=" + fmt(p.pulse.duration) +
                         " s, detuning=" + fmt(p.pulse.detuning) + " rad/s");
  }

  if (af.report == AtomReport::phase) {
    t.add_column("rho", "m");
    for (const PulseEntry& p : af.pulses) {
      t.add_column(p.label + ".phi", "rad");
      t.add_column(p.label + ".phi_minus_phi0", "rad");
      t.add_column(p.label + ".fresnel", "rad");
      t.add_column(p.label + ".potential", "rad");
    }
    std::vector<ao::PhaseModel> models;
    for (const PulseEntry& p : af.pulses) models.push_back(af.setup_for(p).phase_model(p.focal_length));
    for (double rho : af.r) {
      std::vector<double> row{rho};
      for (const auto& m : models) {
        const double phi = m(rho);
        row.push_back(phi);
        row.push_back(phi - m(0.0));
        row.push_back(m.fresnel_term(rho));
        row.push_back(m.potential_term(rho));
      }
      t.add_row(std::move(row));
    }
    // Radius where the residual phase first reaches the quarter-wave limit.
    for (std::size_t k = 0; k < models.size(); ++k) {
      const double limit = constants::pi / 2.0;
      const double phi0 = models[k](0.0);
      std::string where = "beyond the sampled range";
      double prev_r = af.r.front(), prev = std::abs(models[k](prev_r) - phi0);
      for (std::size_t i = 1; i < af.r.size(); ++i) {
        const double cur = std::abs(models[k](af.r[i]) - phi0);
        if (cur >= limit && prev < limit) {
          where = fmt(prev_r + (limit - prev) * (af.r[i] - prev_r) / (cur - prev)) + " m";
          break;
        }
        prev_r = af.r[i];
        prev = cur;
      }
      t.add_footer_comment(af.pulses[k].label + ": |phi - phi0| reaches pi/2 at rho=" + where);
    }
    return;
  }

  t.add_header_comment("z=" + fmt(af.z) + " m");
  t.add_column("r", "m");
  for (const PulseEntry& p : af.pulses) t.add_column(p.label + ".density", "1");
  for (const PulseEntry& p : af.pulses) t.add_column(p.label + ".converged", "1");

  std::vector<ao::WaveField> fields;
  for (const PulseEntry& p : af.pulses) {
    fields.push_back(ao::wavefunction_focal(af.setup_for(p), p.focal_length, af.r, af.z,
                                            c.quadrature, threads));
    for (char ok : fields.back().converged) r.failed_samples += ok ? 0 : 1;
    r.samples += af.r.size();
  }
  for (std::size_t i = 0; i < af.r.size(); ++i) {
    std::vector<double> row{af.r[i]};
    for (const auto& f : fields) row.push_back(f.density[i]);
    for (const auto& f : fields) row.push_back(f.converged[i] ? 1.0 : 0.0);
    t.add_row(std::move(row));
  }
  for (std::size_t k = 0; k < fields.size(); ++k) {
    std::string line = af.pulses[k].label + ":";
    try {
      const ao::SpotMetrics m = ao::spot_metrics(ao::atomic_density(fields[k]));
      line += " fwhm=" + fmt(m.fwhm) + " m; peak_radius=" + fmt(m.peak_radius) +
              " m; first_sidelobe_ratio=" + fmt(m.first_sidelobe_ratio);
    } catch (const ao::SpotError& e) {
      line += std::string(" spot metrics unavailable: ") + e.what();
    }
    t.add_footer_comment(line);
  }
}

void run_focal_sweep(const FocalSweepConfig& fsw, RunResult& r) {
  ResultTable& t = r.table;
  const char* mode = fsw.lens_mode == ao::LensMode::red ? "red" : "blue";
  t.add_header_comment(std::string("lens_mode=") + mode + ", beam_velocity=" +
                       fmt(fsw.beam_velocity) + " m/s");
  std::vector<double> lambda_d;
  for (const auto& s : fsw.species) {
    lambda_d.push_back(ao::de_broglie(s, fsw.beam_velocity));
    t.add_header_comment("species " + s.name + ": mass=" + fmt(s.mass) +
                         " kg, transition_wavelength=" + fmt(s.transition_wavelength) +
                         " m, lambda_D=" + fmt(lambda_d.back()) + " m");
  }
  t.add_column("abs_A", "1");
  for (const auto& s : fsw.species) t.add_column(s.name + ".f", "m");
  for (double a : fsw.field_areas) {
    std::vector<double> row{a};
    for (std::size_t k = 0; k < fsw.species.size(); ++k) {
      row.push_back(ao::focal_length(a, fsw.species[k].transition_wavelength, lambda_d[k],
                                     fsw.lens_mode));
    }
    t.add_row(std::move(row));
  }
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& config, unsigned threads) {
  RunResult r;
  add_preamble(r.table, config);
  if (const auto* fs = std::get_if<FieldScanConfig>(&config.body)) {
    run_field_scan(config, *fs, threads, r);
  } else if (const auto* af = std::get_if<AtomFocusConfig>(&config.body)) {
    run_atom_focus(config, *af, threads, r);
  } else {
    run_focal_sweep(std::get<FocalSweepConfig>(config.body), r);
  }
  add_provenance(r.table, config, r);
  return r;
}

ValidationReport validate_scenario(const ScenarioConfig& config) {
  ValidationReport rep;
  const std::string name = config.name.empty() ? config.source : config.name;
  rep.lines.push_back(name + " (" + to_string(config.mode) + "): config ok");
  const auto* af = std::get_if<AtomFocusConfig>(&config.body);
  if (!af) {
    rep.lines.push_back("no validity diagnostics apply to this mode");
    return rep;
  }
  // Phase reports sample the lens plane, so there is no observation radius.
  const double max_r = af->report == AtomReport::density ? af->r.back() : 0.0;
  for (const PulseEntry& p : af->pulses) {
    for (const ao::Diagnostic& d : ao::validity_check(af->setup_for(p), p.focal_length, max_r)) {
      rep.lines.push_back(p.label + " " + d.name + ": " + d.description + " = " +
                          short_fmt(d.ratio) + (d.lower_bound ? " (min " : " (max ") +
                          short_fmt(d.threshold) + ") " + ao::to_string(d.status));
      if (d.status == ao::DiagnosticStatus::warn) rep.warned = true;
    }
  }
  return rep;
}

namespace {

int execute(const ScenarioConfig& config, const std::optional<std::string>& out_path,
            std::optional<unsigned> threads_arg, std::ostream& out, std::ostream& err) {
  unsigned threads = 1;
  try {
    threads = numkernel::resolve_thread_count(threads_arg);
  } catch (const std::invalid_argument& e) {
    err << "atomlens: " << e.what() << '\n';
    return kExitConfig;
  }
  RunResult result;
  try {
    result = run_scenario(config, threads);
  } catch (const std::exception& e) {
    err << "atomlens: evaluation failed: " << e.what() << '\n';
    return kExitRuntime;
  }
  if (out_path && !out_path->empty()) {
    std::ofstream f(*out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "atomlens: cannot open " << *out_path << " for writing\n";
      return kExitRuntime;
    }
    result.table.write_csv(f);
    f.flush();
    if (!f) {
      err << "atomlens: write to " << *out_path << " failed\n";
      return kExitRuntime;
    }
  } else {
    result.table.write_csv(out);
    out.flush();
  }
  if (result.failed_samples) {
    err << "atomlens: quadrature did not converge for " << result.failed_samples << " of "
        << result.samples << " samples; best estimates written\n";
  }
  return result.exit_code();
}

}  // namespace

int command_run(const std::string& config_path, const std::optional<std::string>& out_path,
                std::optional<unsigned> threads, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "atomlens: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return execute(config, out_path, threads, out, err);
}

int command_validate(const std::string& config_path, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "atomlens: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  ValidationReport rep;
  try {
    rep = validate_scenario(config);
  } catch (const std::exception& e) {
    err << "atomlens: config error: " << e.what() << '\n';
    return kExitConfig;
  }
  for (const auto& l : rep.lines) out << l << '\n';
  return rep.exit_code();
}

int command_preset(const std::string& name, const std::optional<std::string>& out_path,
                   std::optional<unsigned> threads, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  try {
    config = load_preset(name);
  } catch (const ConfigError& e) {
    err << "atomlens: " << e.what() << '\n';
    return kExitConfig;
  }
  return execute(config, out_path, threads, out, err);
}

}  // namespace atomlens::cli
