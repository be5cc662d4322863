#include "atomlens/atom_optics/wavefield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "atomlens/constants.hpp"
#include "atomlens/numkernel/bessel.hpp"
#include "atomlens/numkernel/parallel.hpp"

namespace atomlens::atom_optics {

using Single = std::array<complex, 1>;

bool WaveField::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](char c) { return c != 0; });
}

WaveField wavefunction_focal(const PhaseModel& phase, double aperture_radius, double lambda_d,
                             double f, std::span<const double> r, double z,
                             const numkernel::QuadratureSpec& quad, unsigned threads) {
  if (!(aperture_radius > 0.0) || !(lambda_d > 0.0) || !(f > 0.0)) {
    throw std::invalid_argument("wavefunction_focal: aperture, lambda_D and f must be positive");
  }
  if (aperture_radius > phase.max_radius()) {
    throw std::invalid_argument("wavefunction_focal: potential table does not cover the aperture");
  }
  quad.validate();
  for (double v : r) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("wavefunction_focal: r must be >= 0");
  }

  WaveField out;
  out.r.assign(r.begin(), r.end());
  out.z = z;
  out.psi.resize(r.size());
  out.error.resize(r.size());
  out.converged.assign(r.size(), 1);
  out.lambda_d = lambda_d;
  out.focal_length = f;
  out.aperture_radius = aperture_radius;

  const double a = aperture_radius;
  const double kernel_scale = 2.0 * constants::pi * a / (lambda_d * f);
  const double defocus_scale = constants::pi * a * a * z / (lambda_d * f * f);

  numkernel::parallel_for(r.size(), threads, [&](std::size_t i) {
    const double ri = out.r[i];
    std::vector<double> rho, arg, j0, j1, phi;
    auto fill = [&](std::span<const double> u, std::span<Single> values) {
      const std::size_t n = u.size();
      rho.resize(n);
      arg.resize(n);
      j0.resize(n);
      j1.resize(n);
      phi.resize(n);
      for (std::size_t k = 0; k < n; ++k) {
        rho[k] = a * u[k];
        arg[k] = kernel_scale * u[k] * ri;
      }
      numkernel::bessel_j0j1(arg, j0, j1);
      phase.evaluate(rho, phi);
      for (std::size_t k = 0; k < n; ++k) {
        const double total = phi[k] - defocus_scale * u[k] * u[k];
        values[k] = {std::polar(j0[k] * u[k], total)};
      }
    };
    try {
      const auto est = numkernel::integrate_batch<Single>(fill, 0.0, 1.0, quad);
      out.psi[i] = est.value[0];
      out.error[i] = est.error;
    } catch (const numkernel::ConvergenceFailure<Single>& fail) {
      out.psi[i] = fail.best_estimate()[0];
      out.error[i] = fail.achieved_error();
      out.converged[i] = 0;
    }
  });

  const DensityProfile d = atomic_density(out.r, out.psi);
  out.density = d.density;
  return out;
}

WaveField wavefunction_focal(const LensSetup& setup, double f, std::span<const double> r,
                             double z, const numkernel::QuadratureSpec& quad, unsigned threads) {
  setup.validate();
  return wavefunction_focal(setup.phase_model(f), setup.aperture_radius, setup.lambda_d(), f, r, z,
                            quad, threads);
}

DensityProfile atomic_density(std::span<const double> r, std::span<const complex> psi) {
  if (r.size() != psi.size()) throw std::invalid_argument("atomic_density: r and psi sizes differ");
  if (r.empty()) throw std::invalid_argument("atomic_density: empty profile");
  DensityProfile p;
  p.r.assign(r.begin(), r.end());
  p.density.resize(psi.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    p.density[i] = std::norm(psi[i]);
    if (p.density[i] > peak) {
      peak = p.density[i];
      p.peak_index = i;
    }
  }
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    throw std::domain_error("atomic_density: wavefunction is identically zero");
  }
  for (double& d : p.density) d /= peak;
  p.density[p.peak_index] = 1.0;
  p.peak_radius = p.r[p.peak_index];
  return p;
}

DensityProfile atomic_density(const WaveField& field) { return atomic_density(field.r, field.psi); }

}  // namespace atomlens::atom_optics
