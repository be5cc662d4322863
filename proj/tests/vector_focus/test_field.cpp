#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "atomlens/numkernel/bessel.hpp"
#include "atomlens/vector_focus/field.hpp"
#include "atomlens/vector_focus/scan.hpp"

using namespace atomlens::vector_focus;
using std::numbers::pi;

namespace {

constexpr double kLambda = 1e-6;

PupilSpec make_pupil(Polarization pol, double alpha_deg, double inner_deg = 0.0) {
  PupilSpec p;
  p.wavelength = kLambda;
  p.alpha = alpha_deg * pi / 180.0;
  p.alpha_inner = inner_deg * pi / 180.0;
  p.polarization = std::move(pol);
  return p;
}

double mag(const FieldSample& s) {
  return std::sqrt(std::norm(s.ex) + std::norm(s.ey) + std::norm(s.ez));
}

}  // namespace

TEST_SUITE("vector_focus") {

TEST_CASE("radial focus: on-axis transverse null and longitudinal peak") {
  const PupilSpec p = make_pupil(Polarization::radial(), 80.0);
  const FieldSample s = field_radial({0.0, 0.0, 0.0}, p);
  CHECK(std::abs(s.ex) == 0.0);
  CHECK(std::abs(s.ey) == 0.0);
  CHECK(std::abs(s.ez) > 0.0);
}

TEST_CASE("azimuthal focus: no longitudinal field and a dark axis") {
  const PupilSpec p = make_pupil(Polarization::azimuthal(), 60.0);
  for (double r : {0.0, 0.3e-6, 0.9e-6}) {
    for (double z : {0.0, 0.5e-6}) {
      const FieldSample s = field_azimuthal({r, 0.4, z}, p);
      CHECK(s.ez == complex(0.0));
      if (r == 0.0) CHECK(mag(s) < 1e-9 * std::abs(field_azimuthal({0.8e-6, 0.4, z}, p).ey) + 1e-300);
    }
  }
}

TEST_CASE("cylindrical pupils: intensity does not depend on phi_c") {
  for (const auto& pol : {Polarization::radial(), Polarization::azimuthal()}) {
    const PupilSpec p = make_pupil(pol, 70.0);
    const double ref = intensity(evaluate_field({0.55e-6, 0.0, 0.2e-6}, p));
    for (double phi : {0.3, 1.9, 4.4}) {
      CHECK(intensity(evaluate_field({0.55e-6, phi, 0.2e-6}, p)) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("transverse components rotate with phi_c") {
  const PupilSpec r = make_pupil(Polarization::radial(), 75.0);
  const PupilSpec a = make_pupil(Polarization::azimuthal(), 75.0);
  for (double phi : {0.2, 1.3, 2.8, 5.0}) {
    const FieldSample s = field_radial({0.4e-6, phi, 0.1e-6}, r);
    const FieldSample s0 = field_radial({0.4e-6, 0.0, 0.1e-6}, r);
    CHECK(std::abs(s.ex - s0.ex * std::cos(phi)) < 1e-12 * std::abs(s0.ex));
    CHECK(std::abs(s.ey - s0.ex * std::sin(phi)) < 1e-12 * std::abs(s0.ex));
    const FieldSample t = field_azimuthal({0.4e-6, phi, 0.1e-6}, a);
    const FieldSample t0 = field_azimuthal({0.4e-6, 0.0, 0.1e-6}, a);
    CHECK(std::abs(t.ex + t0.ey * std::sin(phi)) < 1e-12 * std::abs(t0.ey));
    CHECK(std::abs(t.ey - t0.ey * std::cos(phi)) < 1e-12 * std::abs(t0.ey));
  }
}

TEST_CASE("general 2-D integral agrees with the reduced forms") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ur(0.0, 1.5e-6), uphi(0.0, 2 * pi), uz(-1e-6, 1e-6);
  const PupilSpec r = make_pupil(Polarization::radial(), 65.0, 20.0);
  const PupilSpec a = make_pupil(Polarization::azimuthal(), 50.0);
  for (int i = 0; i < 6; ++i) {
    const FocalPoint pt{ur(rng), uphi(rng), uz(rng)};
    for (const PupilSpec* p : {&r, &a}) {
      const FieldSample fast = evaluate_field(pt, *p);
      const FieldSample slow = field_general(pt, *p);
      const double tol = 10.0 * (fast.error + slow.error) + 1e-12 * mag(slow);
      CHECK(std::abs(fast.ex - slow.ex) <= tol);
      CHECK(std::abs(fast.ey - slow.ey) <= tol);
      CHECK(std::abs(fast.ez - slow.ez) <= tol);
    }
  }
}

TEST_CASE("linear polarization: longitudinal share at 80 degrees") {
  const PupilSpec p = make_pupil(Polarization::linear_x(), 80.0);
  double ex = 0.0, ez = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const FieldSample s = evaluate_field({i * 0.02e-6, 0.0, 0.0}, p);
    ex = std::max(ex, std::norm(s.ex));
    ez = std::max(ez, std::norm(s.ez));
  }
  CHECK(ez / ex > 0.15);
  CHECK(ez / ex < 0.35);
}

TEST_CASE("intensity uses the 377 ohm impedance") {
  FieldSample s;
  s.ex = complex(3.0, 4.0);
  s.ez = complex(0.0, 2.0);
  CHECK(intensity(s) == doctest::Approx(29.0 / (2.0 * 377.0)));
}

TEST_CASE("thin-rim closed forms") {
  const double k = 2 * pi / kLambda;
  const double c1 = 2.0;
  const double pref = 2.0 / 377.0 * std::pow(c1 * pi / kLambda, 2);
  using atomlens::numkernel::bessel_j0;
  using atomlens::numkernel::bessel_j1;
  for (double r : {0.0, 0.1e-6, 0.7e-6}) {
    const double x = k * r;
    CHECK(annular_limit_intensity(r, kLambda, c1, RimMode::radial) ==
          doctest::Approx(pref * bessel_j0(x) * bessel_j0(x)));
    CHECK(annular_limit_intensity(r, kLambda, c1, RimMode::azimuthal) ==
          doctest::Approx(pref * bessel_j1(x) * bessel_j1(x)));
    CHECK(annular_limit_intensity(r, kLambda, c1, RimMode::radial, RimProfile::parabola) ==
          doctest::Approx(pref * (1.0 - x * x / 2.0)));
    CHECK(annular_limit_intensity(r, kLambda, c1, RimMode::azimuthal, RimProfile::parabola) ==
          doctest::Approx(pref * x * x / 4.0));
  }
}

TEST_CASE("narrow rim integral approaches the closed form") {
  const double c1 = 1.0;
  const double peak = annular_limit_intensity(0.0, kLambda, c1, RimMode::radial);
  for (double r = 0.0; r <= 2e-6; r += 0.1e-6) {
    const double num = annular_rim_intensity(r, kLambda, c1, RimMode::radial, 0.2 * pi / 180.0);
    const double ref = annular_limit_intensity(r, kLambda, c1, RimMode::radial);
    CHECK(std::abs(num - ref) < 0.01 * peak);
  }
  const double apeak = annular_limit_intensity(0.3e-6, kLambda, c1, RimMode::azimuthal);
  const double anum = annular_rim_intensity(0.3e-6, kLambda, c1, RimMode::azimuthal, 0.2 * pi / 180.0);
  CHECK(anum == doctest::Approx(apeak).epsilon(0.02));
}

TEST_CASE("scan grid layout, validation and thread independence") {
  ScanGrid g;
  g.r_t = {0.0, 0.2e-6, 0.5e-6, 1.1e-6};
  g.phi_c = {0.0, 1.0};
  g.z = {-0.3e-6, 0.0, 0.4e-6};
  const PupilSpec p = make_pupil(Polarization::radial(), 70.0);
  const FieldMap m1 = scan_field(g, p, {}, 1);
  const FieldMap m8 = scan_field(g, p, {}, 8);
  REQUIRE(m1.samples.size() == g.size());
  CHECK(m1.converged());
  for (std::size_t i = 0; i < m1.samples.size(); ++i) {
    CHECK(m1.samples[i].ex == m8.samples[i].ex);
    CHECK(m1.samples[i].ez == m8.samples[i].ez);
  }
  const FieldSample direct = evaluate_field({g.r_t[2], g.phi_c[1], g.z[0]}, p);
  CHECK(m1.at(2, 1, 0).ez == direct.ez);
  CHECK(m1.index(1, 0, 0) == 1);
  CHECK(m1.index(0, 1, 0) == g.r_t.size());

  ScanGrid bad = g;
  bad.r_t = {0.0, 0.0};
  CHECK_THROWS_AS(scan_field(bad, p), std::invalid_argument);
  bad.r_t = {-1e-7, 0.0};
  CHECK_THROWS_AS(scan_field(bad, p), std::invalid_argument);
  bad.r_t = {};
  CHECK_THROWS_AS(scan_field(bad, p), std::invalid_argument);
}

TEST_CASE("scan records quadrature failures and keeps estimates") {
  ScanGrid g;
  g.r_t = {0.3e-6, 5e-6};
  g.phi_c = {0.0};
  g.z = {40e-6};
  atomlens::numkernel::QuadratureSpec q;
  q.rel_tol = 1e-14;
  q.abs_tol = 0.0;
  q.max_depth = 2;
  const FieldMap m = scan_field(g, make_pupil(Polarization::radial(), 85.0), q, 2);
  CHECK_FALSE(m.converged());
  for (const auto& f : m.failures) {
    CHECK(f.achieved_error > f.requested_error);
    CHECK(std::isfinite(std::abs(m.at(f.ir, f.iphi, f.iz).ez)));
  }
}

}  // TEST_SUITE
