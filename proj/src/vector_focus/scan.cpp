#include "atomlens/vector_focus/scan.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "atomlens/numkernel/parallel.hpp"

namespace atomlens::vector_focus {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw std::invalid_argument(std::string("scan grid: axis ") + name + " is empty");
  for (double v : axis) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string("scan grid: axis ") + name + " has a non-finite sample");
    }
  }
  if (axis.size() < 2) return;
  const bool increasing = axis[1] > axis[0];
  for (std::size_t i = 1; i < axis.size(); ++i) {
    const bool ok = increasing ? axis[i] > axis[i - 1] : axis[i] < axis[i - 1];
    if (!ok) throw std::invalid_argument(std::string("scan grid: axis ") + name + " is not strictly monotone");
  }
}

}  // namespace

void ScanGrid::validate() const {
  check_axis(r_t, "r_t");
  check_axis(phi_c, "phi_c");
  check_axis(z, "z");
  for (double r : r_t) {
    if (r < 0.0) throw std::invalid_argument("scan grid: r_t samples must be >= 0");
  }
}

FieldMap scan_field(const ScanGrid& grid, const PupilSpec& pupil, const QuadratureSpec& quad,
                    unsigned threads) {
  grid.validate();
  pupil.validate();
  quad.validate();
  FieldMap map;
  map.grid = grid;
  const std::size_t n = grid.size();
  map.samples.resize(n);
  std::vector<char> failed(n, 0);
  std::vector<double> achieved(n, 0.0);
  std::vector<double> requested(n, 0.0);
  const std::size_t nr = grid.r_t.size();
  const std::size_t nphi = grid.phi_c.size();

  numkernel::parallel_for(n, threads, [&](std::size_t i) {
    const std::size_t ir = i % nr;
    const std::size_t iphi = (i / nr) % nphi;
    const std::size_t iz = i / (nr * nphi);
    const FocalPoint point{grid.r_t[ir], grid.phi_c[iphi], grid.z[iz]};
    try {
      map.samples[i] = evaluate_field(point, pupil, quad);
    } catch (const FieldConvergenceFailure& fail) {
      map.samples[i] = fail.best_estimate();
      failed[i] = 1;
      achieved[i] = fail.achieved_error();
      requested[i] = fail.requested_error();
    }
  });

  for (std::size_t i = 0; i < n; ++i) {
    if (!failed[i]) continue;
    map.failures.push_back({i % nr, (i / nr) % nphi, i / (nr * nphi), achieved[i], requested[i]});
  }
  return map;
}

}  // namespace atomlens::vector_focus
