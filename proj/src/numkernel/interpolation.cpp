#include "atomlens/numkernel/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomlens::numkernel {

namespace {

void check_grid(const std::vector<double>& x, const std::vector<double>& y, std::size_t min_size) {
  if (x.size() != y.size()) throw std::invalid_argument("interpolation: x and y sizes differ");
  if (x.size() < min_size) throw std::invalid_argument("interpolation: too few samples");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw std::invalid_argument("interpolation: non-finite sample");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw std::invalid_argument("interpolation: abscissae must be strictly increasing");
    }
  }
}

// Index i with x[i] <= v <= x[i+1].
std::size_t locate(const std::vector<double>& x, double v) {
  if (!(v >= x.front() && v <= x.back())) {
    throw std::out_of_range("interpolation: argument outside the tabulated range");
  }
  const auto it = std::upper_bound(x.begin(), x.end(), v);
  const auto i = static_cast<std::size_t>(std::distance(x.begin(), it));
  return std::min(i == 0 ? 0 : i - 1, x.size() - 2);
}

}  // namespace

LinearTable::LinearTable(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_grid(x_, y_, 2);
}

double LinearTable::operator()(double x) const {
  const std::size_t i = locate(x_, x);
  const double t = (x - x_[i]) / (x_[i + 1] - x_[i]);
  return y_[i] + t * (y_[i + 1] - y_[i]);
}

BilinearGrid::BilinearGrid(double u_min, double u_max, std::size_t nu, double v_min,
                           double v_max, std::size_t nv, std::vector<double> values)
    : u_min_(u_min), u_max_(u_max), v_min_(v_min), v_max_(v_max), nu_(nu), nv_(nv),
      values_(std::move(values)) {
  if (nu_ < 2 || nv_ < 2) throw std::invalid_argument("bilinear grid: need at least 2x2 samples");
  if (!(u_max_ > u_min_) || !(v_max_ > v_min_)) {
    throw std::invalid_argument("bilinear grid: empty axis range");
  }
  if (values_.size() != nu_ * nv_) throw std::invalid_argument("bilinear grid: wrong sample count");
}

double BilinearGrid::operator()(double u, double v) const {
  const double eps = 1e-12;
  const double su = (u - u_min_) / (u_max_ - u_min_) * static_cast<double>(nu_ - 1);
  const double sv = (v - v_min_) / (v_max_ - v_min_) * static_cast<double>(nv_ - 1);
  if (su < -eps || sv < -eps || su > static_cast<double>(nu_ - 1) + eps ||
      sv > static_cast<double>(nv_ - 1) + eps) {
    throw std::out_of_range("bilinear grid: argument outside the sampled range");
  }
  const auto iu = std::min(static_cast<std::size_t>(std::max(su, 0.0)), nu_ - 2);
  const auto iv = std::min(static_cast<std::size_t>(std::max(sv, 0.0)), nv_ - 2);
  const double tu = std::clamp(su - static_cast<double>(iu), 0.0, 1.0);
  const double tv = std::clamp(sv - static_cast<double>(iv), 0.0, 1.0);
  auto at = [this](std::size_t a, std::size_t b) { return values_[a * nv_ + b]; };
  const double lo = at(iu, iv) + tv * (at(iu, iv + 1) - at(iu, iv));
  const double hi = at(iu + 1, iv) + tv * (at(iu + 1, iv + 1) - at(iu + 1, iv));
  return lo + tu * (hi - lo);
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_grid(x_, y_, 2);
  const std::size_t n = x_.size();
  m_.assign(n, 0.0);
  if (n < 3) return;
  // Tridiagonal system for interior second derivatives (Thomas algorithm).
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    const double lower = h0 / 6.0;
    diag[i] = (h0 + h1) / 3.0;
    upper[i] = h1 / 6.0;
    rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
    if (i > 1) {
      const double w = lower / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
    if (i == 1) break;
  }
}

std::size_t CubicSpline::segment(double x) const { return locate(x_, x); }

double CubicSpline::operator()(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

}  // namespace atomlens::numkernel
