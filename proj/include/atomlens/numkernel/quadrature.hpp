#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atomlens::numkernel {

using complex = std::complex<double>;

enum class QuadratureScheme {
  fixed_gauss_legendre,
  adaptive,
};

struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::adaptive;
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_depth = 30;
  /// Node count of the fixed Gauss-Legendre rule (ignored by the adaptive scheme).
  int fixed_order = 64;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  double tolerance_for(double magnitude) const {
    return std::max(rel_tol * magnitude, abs_tol);
  }
};

template <class T>
struct Estimate {
  T value{};
  double error = 0.0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_(achieved), requested_(requested) {}

  double achieved_error() const noexcept { return achieved_; }
  double requested_error() const noexcept { return requested_; }

 private:
  double achieved_;
  double requested_;
};

/// Thrown when the requested tolerance is not reached; carries the best
/// estimate found so far.
template <class T>
class ConvergenceFailure : public QuadratureError {
 public:
  ConvergenceFailure(T best, double achieved, double requested)
      : QuadratureError(message(achieved, requested), achieved, requested),
        best_(std::move(best)) {}

  const T& best_estimate() const noexcept { return best_; }

 private:
  static std::string message(double achieved, double requested) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "quadrature did not converge: achieved error %.3e, requested %.3e",
                  achieved, requested);
    return buf;
  }

  T best_;
};

struct Rectangle {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

namespace detail {

// Gauss-Kronrod 7/15 abscissae on [0, 1] (descending) and weights.
// xgk[1], xgk[3], xgk[5] and the centre are the Gauss-7 nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double norm_inf(const complex& v) { return std::abs(v); }

template <std::size_t N>
double norm_inf(const std::array<complex, N>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

inline void add_scaled(complex& acc, double w, const complex& v) { acc += w * v; }

template <std::size_t N>
void add_scaled(std::array<complex, N>& acc, double w, const std::array<complex, N>& v) {
  for (std::size_t i = 0; i < N; ++i) acc[i] += w * v[i];
}

inline void add(complex& acc, const complex& v) { acc += v; }

template <std::size_t N>
void add(std::array<complex, N>& acc, const std::array<complex, N>& v) {
  for (std::size_t i = 0; i < N; ++i) acc[i] += v[i];
}

template <class T>
T difference(const T& a, const T& b) {
  T d = a;
  add_scaled(d, -1.0, b);
  return d;
}

inline constexpr double kRoundoffFactor = 50.0 * std::numeric_limits<double>::epsilon();

template <class T>
struct PanelEstimate {
  T value{};
  double error = 0.0;
  // Embedded difference already below the rounding floor; bisecting cannot help.
  bool roundoff_limited = false;
};

// One G7/K15 panel. Integrand is called once with all 15 nodes.
template <class T, class BatchFn>
PanelEstimate<T> kronrod15(BatchFn& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<double, 15> x{};
  x[0] = centre;
  for (int j = 0; j < 7; ++j) {
    x[1 + 2 * j] = centre - half * kXgk[j];
    x[2 + 2 * j] = centre + half * kXgk[j];
  }
  std::array<T, 15> y{};
  f(std::span<const double>(x), std::span<T>(y));

  T kronrod{};
  T gauss{};
  double resabs = kWgk[7] * norm_inf(y[0]);
  add_scaled(kronrod, kWgk[7], y[0]);
  add_scaled(gauss, kWg[3], y[0]);
  for (int j = 0; j < 7; ++j) {
    const T& lhs = y[1 + 2 * j];
    const T& rhs = y[2 + 2 * j];
    add_scaled(kronrod, kWgk[j], lhs);
    add_scaled(kronrod, kWgk[j], rhs);
    resabs += kWgk[j] * (norm_inf(lhs) + norm_inf(rhs));
    if (j % 2 == 1) {
      add_scaled(gauss, kWg[j / 2], lhs);
      add_scaled(gauss, kWg[j / 2], rhs);
    }
  }
  PanelEstimate<T> out;
  out.value = T{};
  add_scaled(out.value, half, kronrod);
  const double embedded = std::abs(half) * norm_inf(difference(kronrod, gauss));
  const double floor = kRoundoffFactor * std::abs(half) * resabs;
  out.error = std::max(embedded, floor);
  out.roundoff_limited = embedded <= floor;
  return out;
}

inline constexpr std::size_t kMaxPanels = 20000;

template <class T, class BatchFn>
Estimate<T> adaptive(BatchFn& f, double lo, double hi, const QuadratureSpec& spec) {
  struct Panel {
    double lo;
    double hi;
    int depth;
    PanelEstimate<T> est;
  };
  std::vector<Panel> panels;
  panels.push_back({lo, hi, 0, kronrod15<T>(f, lo, hi)});

  // Max-heap on error; ties resolved by lower panel index for determinism.
  using Entry = std::pair<double, std::size_t>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::size_t blocked = 0;  // panels at max_depth that could still improve
  auto offer = [&](std::size_t idx) {
    const Panel& p = panels[idx];
    if (p.est.roundoff_limited) return;
    if (p.depth >= spec.max_depth) {
      ++blocked;
      return;
    }
    heap.push({p.est.error, idx});
  };
  offer(0);

  auto totals = [&panels]() {
    Estimate<T> sum;
    for (const auto& p : panels) {
      add(sum.value, p.est.value);
      sum.error += p.est.error;
    }
    return sum;
  };

  Estimate<T> total = totals();
  while (total.error > spec.tolerance_for(norm_inf(total.value))) {
    if (heap.empty() && blocked == 0) break;  // every panel is at its rounding floor
    if (heap.empty() || panels.size() >= kMaxPanels) {
      throw ConvergenceFailure<T>(total.value, total.error,
                                  spec.tolerance_for(norm_inf(total.value)));
    }
    const std::size_t idx = heap.top().second;
    heap.pop();
    const Panel parent = panels[idx];
    const double mid = 0.5 * (parent.lo + parent.hi);
    const int depth = parent.depth + 1;
    panels[idx] = {parent.lo, mid, depth, kronrod15<T>(f, parent.lo, mid)};
    panels.push_back({mid, parent.hi, depth, kronrod15<T>(f, mid, parent.hi)});
    offer(idx);
    offer(panels.size() - 1);
    // Running sums would drift; the panel count stays small enough to resum.
    total = totals();
  }
  return total;
}

template <class T, class BatchFn>
Estimate<T> fixed_rule(BatchFn& f, double lo, double hi, const QuadratureSpec& spec) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  auto apply = [&](int order, double& resabs) {
    const GaussLegendreRule rule = gauss_legendre(order);
    std::vector<double> x(rule.nodes.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = centre + half * rule.nodes[i];
    std::vector<T> y(x.size());
    f(std::span<const double>(x), std::span<T>(y));
    T sum{};
    resabs = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      add_scaled(sum, half * rule.weights[i], y[i]);
      resabs += std::abs(half) * rule.weights[i] * norm_inf(y[i]);
    }
    return sum;
  };
  double resabs = 0.0;
  double coarse_abs = 0.0;
  Estimate<T> out;
  out.value = apply(spec.fixed_order, resabs);
  const T coarse = apply(std::max(1, spec.fixed_order / 2), coarse_abs);
  const double embedded = norm_inf(difference(out.value, coarse));
  const double floor = kRoundoffFactor * resabs;
  out.error = std::max(embedded, floor);
  const double tol = spec.tolerance_for(norm_inf(out.value));
  if (embedded > std::max(tol, floor)) throw ConvergenceFailure<T>(out.value, out.error, tol);
  return out;
}

}  // namespace detail

/// Integrates a vector-capable integrand over [lo, hi]. The integrand is
/// called as f(nodes, values) with a batch of abscissae and must fill one
/// value per node. T is std::complex<double> or std::array<complex, N>.
/// Throws ConvergenceFailure<T> when the tolerance cannot be met.
template <class T, class BatchFn>
Estimate<T> integrate_batch(BatchFn&& f, double lo, double hi, const QuadratureSpec& spec) {
  spec.validate();
  if (!(lo <= hi)) throw std::invalid_argument("integrate: lo must not exceed hi");
  if (lo == hi) return {};
  if (spec.scheme == QuadratureScheme::fixed_gauss_legendre) {
    return detail::fixed_rule<T>(f, lo, hi, spec);
  }
  return detail::adaptive<T>(f, lo, hi, spec);
}

/// Nested 2-D integration over a rectangle. The integrand is called as
/// f(x, ys, values) with one outer abscissa and a batch of inner abscissae.
/// The reported error adds the outer estimate and the worst inner estimate
/// times the outer interval length. Fails when either level fails; the sum is
/// reported as is and may exceed the tolerance for integrals that cancel.
template <class T, class BatchFn2>
Estimate<T> integrate_batch_2d(BatchFn2&& f, const Rectangle& r, const QuadratureSpec& spec) {
  spec.validate();
  if (!(r.x_lo <= r.x_hi) || !(r.y_lo <= r.y_hi)) {
    throw std::invalid_argument("integrate_2d: rectangle is not well ordered");
  }
  QuadratureSpec inner_spec = spec;
  inner_spec.rel_tol = 0.25 * spec.rel_tol;
  inner_spec.abs_tol = 0.25 * spec.abs_tol;
  QuadratureSpec outer_spec = spec;
  outer_spec.rel_tol = 0.5 * spec.rel_tol;
  outer_spec.abs_tol = 0.5 * spec.abs_tol;

  double worst_inner = 0.0;
  bool inner_failed = false;
  auto outer = [&](std::span<const double> xs, std::span<T> values) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double x = xs[i];
      auto inner_fn = [&](std::span<const double> ys, std::span<T> out) { f(x, ys, out); };
      try {
        const Estimate<T> e = integrate_batch<T>(inner_fn, r.y_lo, r.y_hi, inner_spec);
        values[i] = e.value;
        worst_inner = std::max(worst_inner, e.error);
      } catch (const ConvergenceFailure<T>& fail) {
        values[i] = fail.best_estimate();
        worst_inner = std::max(worst_inner, fail.achieved_error());
        inner_failed = true;
      }
    }
  };

  Estimate<T> result;
  bool outer_failed = false;
  try {
    result = integrate_batch<T>(outer, r.x_lo, r.x_hi, outer_spec);
  } catch (const ConvergenceFailure<T>& fail) {
    result.value = fail.best_estimate();
    result.error = fail.achieved_error();
    outer_failed = true;
  }
  result.error += (r.x_hi - r.x_lo) * worst_inner;
  const double tol = spec.tolerance_for(detail::norm_inf(result.value));
  if (outer_failed || inner_failed) {
    throw ConvergenceFailure<T>(result.value, result.error, tol);
  }
  return result;
}

using ScalarIntegrand = std::function<complex(double)>;
using ScalarIntegrand2 = std::function<complex(double, double)>;

/// Complex-valued 1-D integral. Throws ConvergenceFailure<complex>.
Estimate<complex> integrate_c1(const ScalarIntegrand& f, double lo, double hi,
                               const QuadratureSpec& spec = {});

/// Complex-valued integral over a rectangle (first argument on the outer axis).
Estimate<complex> integrate_c2(const ScalarIntegrand2& f, const Rectangle& r,
                               const QuadratureSpec& spec = {});

}  // namespace atomlens::numkernel
