#include "atomlens/numkernel/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace atomlens::numkernel {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("quadrature: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("quadrature: abs_tol must be >= 0");
  if (max_depth < 1) throw std::invalid_argument("quadrature: max_depth must be >= 1");
  if (scheme == QuadratureScheme::fixed_gauss_legendre && fixed_order < 2) {
    throw std::invalid_argument("quadrature: fixed_order must be >= 2");
  }
}

// Newton iteration on P_n from the Chebyshev initial guesses.
GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  const int n = order;
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Estimate<complex> integrate_c1(const ScalarIntegrand& f, double lo, double hi,
                               const QuadratureSpec& spec) {
  auto batch = [&f](std::span<const double> x, std::span<complex> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
  };
  return integrate_batch<complex>(batch, lo, hi, spec);
}

Estimate<complex> integrate_c2(const ScalarIntegrand2& f, const Rectangle& r,
                               const QuadratureSpec& spec) {
  auto batch = [&f](double x, std::span<const double> ys, std::span<complex> out) {
    for (std::size_t i = 0; i < ys.size(); ++i) out[i] = f(x, ys[i]);
  };
  return integrate_batch_2d<complex>(batch, r, spec);
}

}  // namespace atomlens::numkernel
