#pragma once

#include <cstddef>
#include <vector>

#include "atomlens/vector_focus/field.hpp"

namespace atomlens::vector_focus {

/// Sample axes of a field map. Each axis must be non-empty and strictly
/// monotone; r_t samples must be >= 0.
struct ScanGrid {
  std::vector<double> r_t;
  std::vector<double> phi_c;
  std::vector<double> z;

  void validate() const;
  std::size_t size() const { return r_t.size() * phi_c.size() * z.size(); }
};

struct ScanFailure {
  std::size_t ir = 0;
  std::size_t iphi = 0;
  std::size_t iz = 0;
  double achieved_error = 0.0;
  double requested_error = 0.0;
};

/// Field at every grid node; r_t varies fastest, then phi_c, then z.
/// Nodes whose quadrature failed hold the best estimate and are listed in
/// `failures` in storage order.
struct FieldMap {
  ScanGrid grid;
  std::vector<FieldSample> samples;
  std::vector<ScanFailure> failures;

  std::size_t index(std::size_t ir, std::size_t iphi, std::size_t iz) const {
    return (iz * grid.phi_c.size() + iphi) * grid.r_t.size() + ir;
  }
  const FieldSample& at(std::size_t ir, std::size_t iphi, std::size_t iz) const {
    return samples[index(ir, iphi, iz)];
  }
  bool converged() const { return failures.empty(); }
};

/// Evaluates evaluate_field at every node, in parallel over `threads`
/// workers. Values do not depend on the thread count.
FieldMap scan_field(const ScanGrid& grid, const PupilSpec& pupil, const QuadratureSpec& quad = {},
                    unsigned threads = 1);

}  // namespace atomlens::vector_focus
