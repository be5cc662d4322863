#include "atomlens/atom_optics/spot.hpp"

#include <algorithm>
#include <cmath>

namespace atomlens::atom_optics {

namespace {

constexpr double kTieTolerance = 1e-12;

double crossing(double r0, double d0, double r1, double d1, double level) {
  return r0 + (level - d0) * (r1 - r0) / (d1 - d0);
}

}  // namespace

SpotMetrics spot_metrics(std::span<const double> r, std::span<const double> density) {
  const std::size_t n = r.size();
  if (n != density.size()) throw std::invalid_argument("spot_metrics: size mismatch");
  if (n < 2) throw std::invalid_argument("spot_metrics: need at least two samples");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(r[i] > r[i - 1])) throw std::invalid_argument("spot_metrics: r must be ascending");
  }

  const auto peak_it = std::max_element(density.begin(), density.end());
  const std::size_t p = static_cast<std::size_t>(peak_it - density.begin());
  const double peak = *peak_it;
  if (!(peak > 0.0)) throw std::domain_error("spot_metrics: density has no positive peak");
  const double half = 0.5 * peak;

  // Plateau of samples equal to the peak around p; any other sample at the
  // peak value outside it is a competing maximum.
  std::size_t plo = p, phi = p;
  while (plo > 0 && density[plo - 1] >= peak * (1.0 - kTieTolerance)) --plo;
  while (phi + 1 < n && density[phi + 1] >= peak * (1.0 - kTieTolerance)) ++phi;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i < plo || i > phi) && density[i] >= peak * (1.0 - kTieTolerance)) {
      throw AmbiguousPeakError("spot_metrics: two separated maxima with equal height");
    }
  }

  // Outer half-maximum crossing.
  std::size_t hi = phi + 1;
  while (hi < n && density[hi] >= half) ++hi;
  if (hi >= n) throw NoFwhmError("spot_metrics: density never drops below half maximum");

  // Inner crossing, if the lobe does not reach the axis.
  std::size_t lo = plo;
  bool inner = false;
  while (lo > 0) {
    --lo;
    if (density[lo] < half) {
      inner = true;
      break;
    }
  }

  const std::size_t lobe_begin = inner ? lo + 1 : 0;
  if (hi - lobe_begin < 2) {
    throw UnresolvedPeakError("spot_metrics: central lobe spans a single sample");
  }

  const double r_out = crossing(r[hi - 1], density[hi - 1], r[hi], density[hi], half);
  SpotMetrics m;
  m.peak_radius = r[p];
  if (inner) {
    m.fwhm = r_out - crossing(r[lo], density[lo], r[lo + 1], density[lo + 1], half);
  } else {
    m.fwhm = 2.0 * r_out;
  }

  double side = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (i >= lobe_begin && i < hi) continue;
    if (density[i] >= density[i - 1] && density[i] >= density[i + 1] && density[i] > side) {
      side = density[i];
    }
  }
  m.first_sidelobe_ratio = side / peak;
  return m;
}

SpotMetrics spot_metrics(const DensityProfile& profile) {
  return spot_metrics(profile.r, profile.density);
}

}  // namespace atomlens::atom_optics
