// AVX2 variant of the batched J0/J1 kernel. Built with -mavx2; only reached
// through the runtime dispatch in bessel.cpp.

#include <immintrin.h>

#include <cmath>

#include "atomlens/numkernel/bessel.hpp"
#include "bessel_detail.hpp"

namespace atomlens::numkernel::kernels {

namespace {

inline __m256d series4(__m256d ax, __m256d& j1) {
  using detail::kSeries;
  using detail::kSeriesTerms;
  const __m256d half = _mm256_mul_pd(_mm256_set1_pd(0.5), ax);
  const __m256d t = _mm256_mul_pd(half, half);
  __m256d s0 = _mm256_set1_pd(kSeries.j0[kSeriesTerms - 1]);
  __m256d s1 = _mm256_set1_pd(kSeries.j1[kSeriesTerms - 1]);
  for (int k = kSeriesTerms - 2; k >= 0; --k) {
    s0 = _mm256_add_pd(_mm256_mul_pd(s0, t), _mm256_set1_pd(kSeries.j0[k]));
    s1 = _mm256_add_pd(_mm256_mul_pd(s1, t), _mm256_set1_pd(kSeries.j1[k]));
  }
  j1 = _mm256_mul_pd(half, s1);
  return s0;
}

inline __m256d miller4(__m256d ax, __m256d& j1) {
  const __m256d two_over_x = _mm256_div_pd(_mm256_set1_pd(2.0), ax);
  __m256d upper = _mm256_setzero_pd();
  __m256d cur = _mm256_set1_pd(1.0);
  __m256d even_sum = cur;
  for (int n = detail::kMillerStart; n >= 1; --n) {
    const __m256d scale = _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(n)), two_over_x);
    const __m256d lower = _mm256_sub_pd(_mm256_mul_pd(scale, cur), upper);
    upper = cur;
    cur = lower;
    if (((n - 1) & 1) == 0 && n - 1 >= 2) even_sum = _mm256_add_pd(even_sum, cur);
  }
  const __m256d norm = _mm256_add_pd(cur, _mm256_mul_pd(_mm256_set1_pd(2.0), even_sum));
  j1 = _mm256_div_pd(upper, norm);
  return _mm256_div_pd(cur, norm);
}

}  // namespace

void bessel_j0j1_avx2(const double* x, double* j0, double* j1, std::size_t n) {
  const __m256d sign_bit = _mm256_set1_pd(-0.0);
  const __m256d series_limit = _mm256_set1_pd(detail::kSeriesLimit);
  const __m256d asym_limit = _mm256_set1_pd(detail::kAsymptoticLimit);
  const __m256d inf = _mm256_set1_pd(INFINITY);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d ax = _mm256_andnot_pd(sign_bit, vx);
    const __m256d sign = _mm256_and_pd(sign_bit, vx);

    if (_mm256_movemask_pd(_mm256_cmp_pd(ax, inf, _CMP_LT_OQ)) != 0xF) {
      // NaN or inf somewhere: the scalar path raises the domain error.
      bessel_j0j1_scalar(x + i, j0 + i, j1 + i, 4);
      continue;
    }

    const __m256d small = _mm256_cmp_pd(ax, series_limit, _CMP_LE_OQ);
    const __m256d large = _mm256_cmp_pd(ax, asym_limit, _CMP_GE_OQ);
    const int small_bits = _mm256_movemask_pd(small);
    const int large_bits = _mm256_movemask_pd(large);
    const int mid_bits = ~(small_bits | large_bits) & 0xF;

    __m256d r0 = _mm256_setzero_pd();
    __m256d r1 = _mm256_setzero_pd();
    if (small_bits) {
      __m256d s1;
      const __m256d s0 = series4(ax, s1);
      r0 = _mm256_blendv_pd(r0, s0, small);
      r1 = _mm256_blendv_pd(r1, s1, small);
    }
    if (mid_bits) {
      const __m256d mid = _mm256_andnot_pd(_mm256_or_pd(small, large),
                                           _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
      __m256d m1;
      const __m256d m0 = miller4(ax, m1);
      r0 = _mm256_blendv_pd(r0, m0, mid);
      r1 = _mm256_blendv_pd(r1, m1, mid);
    }

    alignas(32) double out0[4];
    alignas(32) double out1[4];
    _mm256_store_pd(out0, r0);
    _mm256_store_pd(out1, _mm256_xor_pd(r1, sign));
    // Large lanes go through the scalar object code: compiled here, sin and
    // cos fuse into sincos, which does not always round like the pair.
    for (int lane = 0; lane < 4; ++lane) {
      if (large_bits & (1 << lane)) bessel_j0j1_scalar(x + i + lane, out0 + lane, out1 + lane, 1);
    }
    for (int lane = 0; lane < 4; ++lane) {
      j0[i + lane] = out0[lane];
      j1[i + lane] = out1[lane];
    }
  }
  bessel_j0j1_scalar(x + i, j0 + i, j1 + i, n - i);
}

}  // namespace atomlens::numkernel::kernels
