#pragma once

#include <complex>
#include <span>
#include <vector>

#include "atomlens/atom_optics/lens.hpp"
#include "atomlens/numkernel/quadrature.hpp"

namespace atomlens::atom_optics {

using complex = std::complex<double>;

/// Atomic wavefunction on a radial grid in a plane z past the focal plane.
/// psi is in units of a^2 (the stationary-phase prefactor is dropped), so
/// only |psi| shapes are meaningful.
struct WaveField {
  std::vector<double> r;
  double z = 0.0;
  std::vector<complex> psi;
  std::vector<double> density;  ///< |psi|^2 / max |psi|^2
  std::vector<double> error;    ///< quadrature error estimate per sample
  std::vector<char> converged;  ///< 0 where quadrature failed (psi holds the best estimate)
  double lambda_d = 0.0;
  double focal_length = 0.0;
  double aperture_radius = 0.0;

  bool all_converged() const;
};

/// psi(r) = int_0^1 J0(2 pi a u r / (lambda_D f)) exp(i Phi(a u) - i pi a^2 u^2 z / (lambda_D f^2)) u du,
/// i.e. the aperture integral over rho = a u. Samples are independent and
/// evaluated on `threads` workers.
WaveField wavefunction_focal(const PhaseModel& phase, double aperture_radius, double lambda_d,
                             double f, std::span<const double> r, double z,
                             const numkernel::QuadratureSpec& quad = {}, unsigned threads = 1);

WaveField wavefunction_focal(const LensSetup& setup, double f, std::span<const double> r,
                             double z, const numkernel::QuadratureSpec& quad = {},
                             unsigned threads = 1);

/// Radial density with unit peak.
struct DensityProfile {
  std::vector<double> r;
  std::vector<double> density;
  std::size_t peak_index = 0;
  double peak_radius = 0.0;
};

/// |psi|^2 normalised to unit peak. Throws std::domain_error when psi is
/// identically zero.
DensityProfile atomic_density(std::span<const double> r, std::span<const complex> psi);
DensityProfile atomic_density(const WaveField& field);

}  // namespace atomlens::atom_optics
