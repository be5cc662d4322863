#include "atomlens/atom_optics/validity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomlens::atom_optics {

namespace {

Diagnostic make(std::string name, double ratio, double threshold, bool lower_bound,
                std::string description) {
  Diagnostic d;
  d.name = std::move(name);
  d.ratio = ratio;
  d.threshold = threshold;
  d.lower_bound = lower_bound;
  const bool ok = lower_bound ? ratio >= threshold : ratio <= threshold;
  d.status = ok ? DiagnosticStatus::pass : DiagnosticStatus::warn;
  d.description = std::move(description);
  return d;
}

}  // namespace

std::vector<Diagnostic> validity_check(const LensSetup& setup, double f, double max_r_observation) {
  setup.validate();
  if (!(f > 0.0)) throw std::invalid_argument("validity_check: f must be positive");
  if (!(max_r_observation >= 0.0)) {
    throw std::invalid_argument("validity_check: observation radius must be >= 0");
  }
  const AtomSpecies& s = setup.species;
  std::vector<Diagnostic> out;
  out.push_back(make("detuning", std::abs(setup.pulse.detuning) / s.linewidth,
                     kMinDetuningOverLinewidth, true, "|Delta|/Gamma"));
  out.push_back(make("pulse_duration", setup.pulse.duration * s.recoil_frequency(),
                     kMaxPulseTimesRecoil, false, "tau*omega_recoil"));
  out.push_back(make("angular_aperture", setup.aperture_radius / f, kMaxApertureOverFocus, false,
                     "a/f"));
  out.push_back(make("observation_radius", max_r_observation / f, kMaxObservationOverFocus, false,
                     "max_r/f"));
  return out;
}

bool all_pass(const std::vector<Diagnostic>& diagnostics) {
  return std::all_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.status == DiagnosticStatus::pass; });
}

const char* to_string(DiagnosticStatus status) {
  return status == DiagnosticStatus::pass ? "pass" : "warn";
}

}  // namespace atomlens::atom_optics
