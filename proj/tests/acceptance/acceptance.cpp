// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "atomlens/atom_optics/spot.hpp"
#include "atomlens/atom_optics/wavefield.hpp"
#include "atomlens/cli/config.hpp"
#include "atomlens/cli/runner.hpp"
#include "atomlens/numkernel/bessel.hpp"
#include "atomlens/numkernel/quadrature.hpp"
#include "atomlens/vector_focus/field.hpp"
#include "atomlens/vector_focus/scan.hpp"
#include "../support/integrands.hpp"

namespace {

using namespace atomlens;
using std::numbers::pi;
namespace vf = vector_focus;
namespace ao = atom_optics;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const cli::PupilEntry& pupil(const cli::FieldScanConfig& fs, const std::string& label) {
  for (const auto& p : fs.pupils) {
    if (p.label == label) return p;
  }
  throw std::runtime_error("preset has no pupil " + label);
}

Outcome fig2_ratio() {
  const cli::ScenarioConfig c = cli::load_preset("fig2");
  const auto& fs = std::get<cli::FieldScanConfig>(c.body);
  const vf::PupilSpec& p = pupil(fs, "full").pupil;

  vf::ScanGrid g;
  g.phi_c = {0.0};
  g.z = {0.0};
  for (int i = 0; i < 200; ++i) g.r_t.push_back(fs.grid.r_t.back() * i / 199.0);
  const auto t0 = std::chrono::steady_clock::now();
  const vf::FieldMap m = vf::scan_field(g, p, c.quadrature, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  double ex = 0.0, ez = 0.0;
  for (const auto& s : m.samples) {
    ex = std::max(ex, std::norm(s.ex));
    ez = std::max(ez, std::norm(s.ez));
  }
  const double ratio = 100.0 * ex / ez;
  const bool pass = std::abs(ratio - 5.0) <= 1.5 && seconds < 5.0 && m.converged();
  return {pass, fmt("peak |Ex|^2 / peak |Ez|^2 = %.2f%% (target 5 +- 1.5); 200 samples in %.3f s", ratio,
                    seconds)};
}

Outcome fig3_peak() {
  const cli::ScenarioConfig c = cli::load_preset("fig3");
  const auto& fs = std::get<cli::FieldScanConfig>(c.body);
  const vf::PupilSpec& p = fs.pupils.front().pupil;
  const vf::FieldMap m = vf::scan_field(fs.grid, p, c.quadrature, 4);
  std::size_t best = 0;
  for (std::size_t i = 0; i < fs.grid.r_t.size(); ++i) {
    if (vf::intensity(m.at(i, 0, 0)) > vf::intensity(m.at(best, 0, 0))) best = i;
  }
  const double r = fs.grid.r_t[best] / p.wavelength;
  return {std::abs(r - 1.0) <= 0.2 && m.converged(),
          fmt("intensity maximum at r_t = %.3f lambda (target 1 +- 0.2)", r)};
}

Outcome annular_limit() {
  vf::PupilSpec p;
  p.wavelength = 1e-6;
  p.alpha = pi / 2;
  p.alpha_inner = 89.5 * pi / 180.0;
  p.polarization = vf::Polarization::radial();
  p.apodization = vf::Apodization::uniform();
  const double k = p.wavenumber();
  const double ez0 = std::abs(vf::field_radial({0.0, 0.0, 0.0}, p).ez);
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double r = 2e-6 * i / 400.0;
    const double ez = std::abs(vf::field_radial({r, 0.0, 0.0}, p).ez) / ez0;
    worst = std::max(worst, std::abs(ez - std::abs(numkernel::bessel_j0(k * r))));
  }
  return {worst <= 0.02, fmt("max | |Ez|/|Ez(0)| - |J0(k r)| | = %.4f over [0, 2 lambda] (limit 0.02)", worst)};
}

Outcome focal_lengths() {
  const ao::AtomSpecies cr = ao::chromium52();
  const double ld = ao::de_broglie(cr, 500.0);
  const double f100 = ao::focal_length(100.0, cr.transition_wavelength, ld, ao::LensMode::red);
  const double f20 = ao::focal_length(20.0, cr.transition_wavelength, ld, ao::LensMode::red);
  bool pass = std::abs(f100 / 19e-6 - 1.0) <= 0.05 && std::abs(f20 / 96e-6 - 1.0) <= 0.05;

  const cli::RunResult r = cli::run_scenario(cli::load_preset("fig5"), 1);
  std::string sweep;
  for (std::size_t col = 1; col < r.table.columns().size(); ++col) {
    double lo = 1e300, hi = 0.0;
    for (const auto& row : r.table.rows()) {
      lo = std::min(lo, row[col]);
      hi = std::max(hi, row[col]);
    }
    pass = pass && lo >= 1e-6 && lo < 10e-6 && hi >= 100e-6 && hi < 1000e-6;
    sweep += "; " + r.table.columns()[col].name + fmt(" %.2f..%.0f um", lo * 1e6, hi * 1e6);
  }
  return {pass, fmt("Cr 500 m/s: f(100) = %.2f um, f(20) = %.2f um", f100 * 1e6, f20 * 1e6) +
                    "; fig5 sweep" + sweep};
}

Outcome fig7_spot() {
  const cli::ScenarioConfig c = cli::load_preset("fig7");
  const auto& af = std::get<cli::AtomFocusConfig>(c.body);
  std::vector<double> fwhm;
  bool dominant = true;
  for (const auto& p : af.pulses) {
    const ao::WaveField w =
        ao::wavefunction_focal(af.setup_for(p), p.focal_length, af.r, af.z, c.quadrature, 4);
    const ao::SpotMetrics m = ao::spot_metrics(ao::atomic_density(w));
    fwhm.push_back(m.fwhm);
    dominant = dominant && m.peak_radius == 0.0 && m.first_sidelobe_ratio < 0.5 && w.all_converged();
  }
  const bool pass = fwhm[0] <= 3e-9 && fwhm[0] < fwhm[1] && dominant;
  return {pass, fmt("FWHM(A=-100) = %.3f nm (limit 3), FWHM(A=-20) = %.3f nm, ordering ", fwhm[0] * 1e9,
                    fwhm[1] * 1e9) +
                    (fwhm[0] < fwhm[1] ? "holds" : "violated")};
}

Outcome airy_oracle() {
  const ao::AtomSpecies cr = ao::chromium52();
  const double ld = ao::de_broglie(cr, 500.0), a = 1e-7;
  const double f = ao::focal_length(100.0, cr.transition_wavelength, ld, ao::LensMode::red);
  const double scale = ld * f / a;
  std::vector<double> r;
  for (int i = 0; i <= 2000; ++i) r.push_back(0.5 * scale + 0.2 * scale * i / 2000.0);
  const ao::WaveField w = ao::wavefunction_focal(ao::PhaseModel::ideal(), a, ld, f, r, 0.0, {}, 4);
  std::size_t imin = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (std::norm(w.psi[i]) < std::norm(w.psi[imin])) imin = i;
  }
  const double zero = r[imin] / scale;
  return {std::abs(zero / 0.610 - 1.0) <= 0.01,
          fmt("first zero at %.4f lambda_D f / a (target 0.610 +- 1%%)", zero)};
}

Outcome curvature() {
  ao::LensSetup red;
  red.species = ao::chromium52();
  red.pulse.duration = 1e-8;
  red.pulse.detuning = -2 * pi * 1e9;
  red.pulse.field_area = -100.0;
  red.aperture_radius = 1e-7;
  red.beam_velocity = 500.0;
  ao::LensSetup blue = red;
  blue.pulse.detuning = -red.pulse.detuning;
  blue.pulse.field_area = 100.0;
  blue.profile.kind = ao::PhaseKind::blue_j1sq;

  const double fr = red.paraxial_focal_length();
  const double fa = blue.paraxial_focal_length();
  const double scale = 100.0 * std::pow(red.species.wavenumber(), 2);
  const double cr = red.phase_model(fr).curvature_at_axis() / scale;
  const double cb = blue.phase_model(fa).curvature_at_axis() / scale;
  const double ratio = fa / fr;
  const bool pass = std::abs(cr) < 1e-14 && std::abs(cb) < 1e-14 && std::abs(ratio - 2.0) < 1e-14;
  return {pass, fmt("relative curvature at axis: red %.1e, blue %.1e; f^a / f^r = %.17g", cr, cb, ratio)};
}

Outcome oracles() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ur(0.0, 2e-6), uphi(0.0, 2 * pi), uz(-1e-6, 1e-6),
      ualpha(30.0, 85.0);
  int field_ok = 0;
  double worst_field = 0.0;
  for (int i = 0; i < 50; ++i) {
    vf::PupilSpec p;
    p.alpha = ualpha(rng) * pi / 180.0;
    p.polarization = (i % 2 == 0) ? vf::Polarization::radial() : vf::Polarization::azimuthal();
    const vf::FocalPoint pt{ur(rng), uphi(rng), uz(rng)};
    const vf::FieldSample fast = vf::evaluate_field(pt, p);
    const vf::FieldSample slow = vf::field_general(pt, p);
    const double diff = std::max({std::abs(fast.ex - slow.ex), std::abs(fast.ey - slow.ey),
                                  std::abs(fast.ez - slow.ez)});
    const double tol = 10.0 * (fast.error + slow.error);
    worst_field = std::max(worst_field, diff / tol);
    if (diff <= tol) ++field_ok;
  }
  int quad_ok = 0;
  double worst_quad = 0.0;
  const auto integrands = testing::representative_integrands();
  for (const auto& in : integrands) {
    const auto est = numkernel::integrate_c1(in.f, in.lo, in.hi);
    const auto ref = testing::trapezoid(in.f, in.lo, in.hi, 1000000);
    const double rel = std::abs(est.value - ref) / std::abs(ref);
    worst_quad = std::max(worst_quad, rel);
    if (rel <= 1e-8) ++quad_ok;
  }
  const bool pass = field_ok == 50 && quad_ok == static_cast<int>(integrands.size());
  return {pass, fmt("general vs reduced: %.0f/50 within 10x error (worst %.2f of budget); "
                    "adaptive vs trapezoid: %.0f/10 within 1e-8 (worst %.1e)",
                    field_ok, worst_field, quad_ok, worst_quad)};
}

Outcome symmetries() {
  vf::PupilSpec rad;
  rad.alpha = 70.0 * pi / 180.0;
  vf::PupilSpec azi = rad;
  azi.polarization = vf::Polarization::azimuthal();
  std::vector<std::string> broken;

  for (const vf::PupilSpec* p : {&rad, &azi}) {
    const double ref = vf::intensity(vf::evaluate_field({0.6e-6, 0.0, 0.3e-6}, *p));
    for (double phi : {0.5, 2.0, 4.0}) {
      const double v = vf::intensity(vf::evaluate_field({0.6e-6, phi, 0.3e-6}, *p));
      if (std::abs(v - ref) > 1e-12 * ref) broken.push_back("phi_c independence");
    }
  }
  const vf::FieldSample r0 = vf::field_radial({0.0, 0.0, 0.2e-6}, rad);
  if (std::abs(r0.ex) != 0.0 || std::abs(r0.ey) != 0.0) broken.push_back("radial on-axis null");
  const vf::FieldSample a0 = vf::field_azimuthal({0.0, 0.0, 0.2e-6}, azi);
  const double a_scale = std::abs(vf::field_azimuthal({0.5e-6, 0.0, 0.2e-6}, azi).ey);
  if (std::abs(a0.ex) + std::abs(a0.ey) > 1e-12 * a_scale) broken.push_back("azimuthal on-axis null");

  for (double phi : {0.7, 2.9}) {
    const vf::FieldSample s = vf::field_radial({0.4e-6, phi, 0.0}, rad);
    if (std::abs(s.ex * std::sin(phi) - s.ey * std::cos(phi)) > 1e-12 * std::abs(s.ex) + 1e-300) {
      broken.push_back("Ex/Ey rotation");
    }
  }
  for (int i = 0; i < 20; ++i) {
    if (vf::field_azimuthal({0.1e-6 * i, 0.3 * i, 0.05e-6 * i}, azi).ez != vf::complex(0.0)) {
      broken.push_back("Ez azimuthal");
      break;
    }
  }
  double worst = 0.0;
  const double h = 1e-4;
  for (double x = 0.05; x < 60.0; x += 0.1) {
    using numkernel::bessel_j0;
    const double d =
        (-bessel_j0(x + 2 * h) + 8 * bessel_j0(x + h) - 8 * bessel_j0(x - h) + bessel_j0(x - 2 * h)) /
        (12 * h);
    worst = std::max(worst, std::abs(d + numkernel::bessel_j1(x)));
  }
  if (worst > 1e-10) broken.push_back("J0' = -J1");
  std::string detail = broken.empty() ? "all symmetry checks hold" : "broken:";
  for (const auto& b : broken) detail += " " + b + ";";
  return {broken.empty(), detail + fmt(" (max |J0' + J1| = %.1e)", worst)};
}

Outcome determinism() {
  int identical = 0;
  std::string names;
  for (auto name : cli::preset_names()) {
    const cli::ScenarioConfig c = cli::load_preset(name);
    const std::string one = cli::run_scenario(c, 1).table.to_csv();
    const std::string two = cli::run_scenario(c, 2).table.to_csv();
    const std::string eight = cli::run_scenario(c, 8).table.to_csv();
    if (one == two && one == eight) {
      ++identical;
    } else {
      names += " " + std::string(name);
    }
  }
  const int total = static_cast<int>(cli::preset_names().size());
  return {identical == total, fmt("%.0f/%.0f presets byte-identical across 1, 2 and 8 threads", identical,
                                  total) +
                                  (names.empty() ? "" : "; differing:" + names)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "radial 80 deg transverse share", fig2_ratio},
      {2, "azimuthal 30 deg ring radius", fig3_peak},
      {3, "thin annulus J0 limit", annular_limit},
      {4, "focal length regression", focal_lengths},
      {5, "atomic spot width", fig7_spot},
      {6, "ideal lens Airy zero", airy_oracle},
      {7, "paraxial curvature cancellation", curvature},
      {8, "oracle equivalence", oracles},
      {9, "symmetry suite", symmetries},
      {10, "thread determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
