#include "atomlens/numkernel/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bessel_detail.hpp"

namespace atomlens::numkernel {

namespace {

void check_finite(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("bessel: argument is not finite");
  }
}

void eval_one(double x, double& j0, double& j1) {
  check_finite(x);
  double r0 = 0.0;
  double r1 = 0.0;
  detail::j0j1_abs(std::abs(x), r0, r1);
  j0 = r0;
  j1 = std::signbit(x) ? -r1 : r1;
}

SimdLevel detect_simd_level() {
  if (const char* env = std::getenv("ATOMLENS_SIMD")) {
    if (std::string_view(env) == "scalar") return SimdLevel::scalar;
  }
  if (simd_level_available(SimdLevel::avx2)) return SimdLevel::avx2;
  return SimdLevel::scalar;
}

}  // namespace

double bessel_j0(double x) {
  double j0 = 0.0;
  double j1 = 0.0;
  eval_one(x, j0, j1);
  return j0;
}

double bessel_j1(double x) {
  double j0 = 0.0;
  double j1 = 0.0;
  eval_one(x, j0, j1);
  return j1;
}

namespace kernels {

void bessel_j0j1_scalar(const double* x, double* j0, double* j1, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) eval_one(x[i], j0[i], j1[i]);
}

}  // namespace kernels

const char* to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return "scalar";
    case SimdLevel::avx2:
      return "avx2";
  }
  return "unknown";
}

bool simd_level_available(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
#if defined(ATOMLENS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

SimdLevel active_simd_level() {
  static const SimdLevel level = detect_simd_level();
  return level;
}

void bessel_j0j1(std::span<const double> x, std::span<double> j0,
                 std::span<double> j1) {
  if (j0.size() != x.size() || j1.size() != x.size()) {
    throw std::invalid_argument("bessel_j0j1: span sizes differ");
  }
#if defined(ATOMLENS_HAVE_AVX2)
  if (active_simd_level() == SimdLevel::avx2) {
    kernels::bessel_j0j1_avx2(x.data(), j0.data(), j1.data(), x.size());
    return;
  }
#endif
  kernels::bessel_j0j1_scalar(x.data(), j0.data(), j1.data(), x.size());
}

}  // namespace atomlens::numkernel
