#pragma once

// Region split and per-region algorithms shared by the scalar and SIMD
// Bessel kernels. Both kernels must evaluate the same arithmetic in the same
// order so that they agree bit for bit; these TUs build with -ffp-contract=off.

#include <array>
#include <cmath>
#include <numbers>

namespace atomlens::numkernel::detail {

// Internal linkage: this header is compiled into TUs with different ISA flags,
// and a shared inline definition could leak AVX2 code into the scalar path.
namespace {

// |x| <= kSeriesLimit: power series in t = (x/2)^2. Beyond x ~ 3 the
// alternating terms cancel badly, so the recurrence takes over early.
// kSeriesLimit < |x| < kAsymptoticLimit: Miller backward recurrence.
// |x| >= kAsymptoticLimit: Hankel asymptotic expansion.
inline constexpr double kSeriesLimit = 2.0;
inline constexpr double kAsymptoticLimit = 25.0;

// At t = 1 the dropped term of the J0 series is 1/(16!)^2 ~ 2e-27.
inline constexpr int kSeriesTerms = 16;

// Starting order for the backward recurrence; J_80(x)/J_0(x) < 1e-20 on the
// whole recurrence interval.
inline constexpr int kMillerStart = 80;

struct SeriesCoefficients {
  // J0(x) = sum_k j0[k] t^k,  j0[k] = (-1)^k / (k!)^2
  std::array<double, kSeriesTerms> j0{};
  // J1(x) = (x/2) sum_k j1[k] t^k,  j1[k] = (-1)^k / (k! (k+1)!)
  std::array<double, kSeriesTerms> j1{};
};

constexpr SeriesCoefficients make_series_coefficients() {
  SeriesCoefficients c;
  c.j0[0] = 1.0;
  c.j1[0] = 1.0;
  for (int k = 1; k < kSeriesTerms; ++k) {
    const double dk = k;
    c.j0[k] = -c.j0[k - 1] / (dk * dk);
    c.j1[k] = -c.j1[k - 1] / (dk * (dk + 1.0));
  }
  return c;
}

inline constexpr SeriesCoefficients kSeries = make_series_coefficients();

inline void series(double ax, double& j0, double& j1) {
  const double half = 0.5 * ax;
  const double t = half * half;
  double s0 = kSeries.j0[kSeriesTerms - 1];
  double s1 = kSeries.j1[kSeriesTerms - 1];
  for (int k = kSeriesTerms - 2; k >= 0; --k) {
    s0 = s0 * t + kSeries.j0[k];
    s1 = s1 * t + kSeries.j1[k];
  }
  j0 = s0;
  j1 = half * s1;
}

// Normalised with J0 + 2 (J2 + J4 + ...) = 1.
inline void miller(double ax, double& j0, double& j1) {
  const double two_over_x = 2.0 / ax;
  double upper = 0.0;  // p_{n+1}
  double cur = 1.0;    // p_n, starting at n = kMillerStart (even)
  double even_sum = cur;
  for (int n = kMillerStart; n >= 1; --n) {
    const double lower = (static_cast<double>(n) * two_over_x) * cur - upper;
    upper = cur;
    cur = lower;
    if (((n - 1) & 1) == 0 && n - 1 >= 2) even_sum = even_sum + cur;
  }
  const double norm = cur + 2.0 * even_sum;
  j0 = cur / norm;
  j1 = upper / norm;
}

// J_nu(x) ~ sqrt(2/(pi x)) [P cos w - Q sin w],  w = x - nu pi/2 - pi/4,
// P = a0 - a2/x^2 + a4/x^4 - ...,  Q = a1/x - a3/x^3 + ...,
// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
inline void asymptotic_pq(double nu, double ax, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  p = 1.0;
  q = 0.0;
  double term = 1.0;  // a_k / x^k with alternating sign folded in below
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * ax);
    // k odd contributes to Q with sign (-1)^((k-1)/2); k even to P with (-1)^(k/2)
    const int phase = (k / 2) & 1;
    const double signed_term = phase ? -term : term;
    if (k & 1) {
      q += signed_term;
    } else {
      p += signed_term;
    }
    if (std::abs(term) < 1e-18) break;
  }
}

inline void asymptotic(double ax, double& j0, double& j1) {
  const double c = std::cos(ax);
  const double s = std::sin(ax);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * ax));
  const double r = std::numbers::sqrt2 / 2.0;
  double p = 0.0;
  double q = 0.0;
  asymptotic_pq(0.0, ax, p, q);
  // w0 = x - pi/4
  j0 = amp * (p * (c + s) * r - q * (s - c) * r);
  asymptotic_pq(1.0, ax, p, q);
  // w1 = x - 3 pi/4
  j1 = amp * (p * (s - c) * r - q * (-s - c) * r);
}

// Evaluates on |x|; the caller applies the odd symmetry of J1.
inline void j0j1_abs(double ax, double& j0, double& j1) {
  if (ax <= kSeriesLimit) {
    series(ax, j0, j1);
  } else if (ax < kAsymptoticLimit) {
    miller(ax, j0, j1);
  } else {
    asymptotic(ax, j0, j1);
  }
}

}  // namespace

}  // namespace atomlens::numkernel::detail
