#pragma once

#include <cstddef>
#include <span>

namespace atomlens::numkernel {

/// Bessel function of the first kind, order zero. Absolute error below 1e-12
/// for |x| <= 1e4. Throws std::domain_error for non-finite x.
double bessel_j0(double x);

/// Bessel function of the first kind, order one (odd in x).
double bessel_j1(double x);

/// Evaluates J0 and J1 for every element of `x` using the fastest kernel the
/// CPU supports. All three spans must have the same length.
void bessel_j0j1(std::span<const double> x, std::span<double> j0,
                 std::span<double> j1);

enum class SimdLevel { scalar, avx2 };

const char* to_string(SimdLevel level);

/// Kernel chosen by bessel_j0j1. Decided once per process; ATOMLENS_SIMD=scalar
/// forces the reference kernel.
SimdLevel active_simd_level();

/// True when `level` was compiled in and the running CPU supports it.
bool simd_level_available(SimdLevel level);

namespace kernels {

void bessel_j0j1_scalar(const double* x, double* j0, double* j1, std::size_t n);

#if defined(ATOMLENS_HAVE_AVX2)
void bessel_j0j1_avx2(const double* x, double* j0, double* j1, std::size_t n);
#endif

}  // namespace kernels

}  // namespace atomlens::numkernel
