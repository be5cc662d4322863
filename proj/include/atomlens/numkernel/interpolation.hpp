#pragma once

#include <cstddef>
#include <vector>

namespace atomlens::numkernel {

/// Piecewise-linear interpolation on a strictly increasing grid.
class LinearTable {
 public:
  LinearTable() = default;
  LinearTable(std::vector<double> x, std::vector<double> y);

  /// Throws std::out_of_range outside [front, back].
  double operator()(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Bilinear interpolation of samples on a uniform (u, v) lattice, stored
/// row-major with v fastest.
class BilinearGrid {
 public:
  BilinearGrid() = default;
  BilinearGrid(double u_min, double u_max, std::size_t nu, double v_min, double v_max,
               std::size_t nv, std::vector<double> values);

  double operator()(double u, double v) const;

 private:
  double u_min_ = 0.0, u_max_ = 0.0, v_min_ = 0.0, v_max_ = 0.0;
  std::size_t nu_ = 0, nv_ = 0;
  std::vector<double> values_;
};

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  /// Throws std::out_of_range outside [front, back].
  double operator()(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace atomlens::numkernel
