#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "atomlens/atom_optics/lens.hpp"
#include "atomlens/atom_optics/species.hpp"
#include "atomlens/constants.hpp"
#include "atomlens/numkernel/bessel.hpp"

using namespace atomlens::atom_optics;
using std::numbers::pi;

namespace {

LensSetup chromium_setup(double field_area, double velocity = 500.0) {
  LensSetup s;
  s.species = chromium52();
  s.pulse.duration = 1e-8;
  s.pulse.detuning = -2 * pi * 1e9;
  s.pulse.field_area = field_area;
  s.aperture_radius = 1e-7;
  s.beam_velocity = velocity;
  return s;
}

}  // namespace

TEST_SUITE("atom_optics") {

TEST_CASE("species presets") {
  const AtomSpecies cr = chromium52();
  CHECK(cr.mass == 8.68e-26);
  CHECK(cr.transition_wavelength == 0.43e-6);
  CHECK(sodium23().mass == 3.84e-26);
  CHECK(species_preset("na23").transition_wavelength == 0.59e-6);
  CHECK_THROWS_AS(species_preset("rb87"), std::invalid_argument);
  AtomSpecies bad = cr;
  bad.linewidth = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(cr.recoil_frequency() ==
        doctest::Approx(atomlens::constants::hbar * cr.wavenumber() * cr.wavenumber() / (2 * cr.mass)));
}

TEST_CASE("de Broglie wavelength") {
  CHECK(de_broglie(chromium52(), 500.0) == doctest::Approx(1.527e-11).epsilon(1e-3));
  CHECK(de_broglie(sodium23(), 100.0) == doctest::Approx(1.726e-10).epsilon(1e-3));
  CHECK(de_broglie(chromium52(), 1000.0) == doctest::Approx(de_broglie(chromium52(), 500.0) / 2));
  CHECK_THROWS_AS(de_broglie(chromium52(), 0.0), std::invalid_argument);
}

TEST_CASE("dipole potential") {
  const AtomSpecies cr = chromium52();
  CHECK(dipole_potential(0.0, cr, -1e9) == 0.0);
  CHECK(dipole_potential(1e6, cr, -1e9) < 0.0);
  CHECK(dipole_potential(1e6, cr, 1e9) > 0.0);
  CHECK(dipole_potential(1e6, cr, 2e9) == doctest::Approx(dipole_potential(1e6, cr, 1e9) / 2));
  const double expected = atomlens::constants::hbar * cr.linewidth * cr.linewidth * 1e6 /
                          (8.0 * 1e9 * cr.saturation_intensity);
  CHECK(dipole_potential(1e6, cr, 1e9) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(dipole_potential(1e6, cr, 0.0), std::domain_error);
}

TEST_CASE("field area") {
  const AtomSpecies cr = chromium52();
  LensPulse p;
  p.duration = 2e-8;
  p.detuning = -3e9;
  p.c1 = 1e5;
  const double a = field_area(p, cr);
  CHECK(a < 0.0);
  const double k = 2 * pi / cr.transition_wavelength;
  const double hand = p.duration * k * k * 1e10 * cr.linewidth * cr.linewidth /
                      (16.0 * 377.0 * cr.saturation_intensity * p.detuning);
  CHECK(a == doctest::Approx(hand).epsilon(1e-12));
  LensPulse q = p;
  q.c1 = 2e5;
  CHECK(field_area(q, cr) == doctest::Approx(4 * a).epsilon(1e-14));
  q.detuning = 3e9;
  CHECK(field_area(q, cr) > 0.0);
  q.field_area = 5.0;
  CHECK(effective_field_area(q, cr) == 5.0);
  q.field_area = -5.0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  LensPulse none;
  none.duration = 1e-8;
  none.detuning = 1e9;
  CHECK_THROWS_AS(none.validate(), std::invalid_argument);
  none.c1 = 1.0;
  none.detuning = 0.0;
  CHECK_THROWS(none.validate());
}

TEST_CASE("focal lengths for chromium at 500 m/s") {
  const AtomSpecies cr = chromium52();
  const double ld = de_broglie(cr, 500.0);
  const double f100 = focal_length(-100.0, cr.transition_wavelength, ld, LensMode::red);
  const double f20 = focal_length(-20.0, cr.transition_wavelength, ld, LensMode::red);
  CHECK(f100 == doctest::Approx(19e-6).epsilon(0.05));
  CHECK(f20 == doctest::Approx(96e-6).epsilon(0.05));
  CHECK(focal_length(-200.0, cr.transition_wavelength, ld, LensMode::red) ==
        doctest::Approx(f100 / 2).epsilon(1e-12));
  CHECK(focal_length(100.0, cr.transition_wavelength, ld, LensMode::blue) ==
        doctest::Approx(2 * f100).epsilon(1e-12));
  CHECK(focal_length(-100.0, cr.transition_wavelength, de_broglie(cr, 1000.0), LensMode::red) ==
        doctest::Approx(2 * f100).epsilon(1e-12));
  CHECK_THROWS_AS(focal_length(0.0, cr.transition_wavelength, ld, LensMode::red), std::domain_error);
  CHECK(lens_polarity(-1.0, LensMode::red) == Polarity::converging);
  CHECK(lens_polarity(1.0, LensMode::red) == Polarity::diverging);
  CHECK(lens_polarity(1.0, LensMode::blue) == Polarity::converging);
  CHECK(chromium_setup(-100.0).paraxial_focal_length() == doctest::Approx(f100));
}

TEST_CASE("aberration phase on axis") {
  const double k = 2 * pi / 0.43e-6;
  CHECK(aberration_phase(0.0, 1e-5, 1.5e-11, -7.0, k, LensMode::red) == doctest::Approx(7.0));
  CHECK(aberration_phase(0.0, 1e-5, 1.5e-11, -7.0, k, LensMode::blue) == 0.0);
  const double rho = 0.05e-6;
  const double j0 = atomlens::numkernel::bessel_j0(k * rho);
  CHECK(aberration_phase(rho, 1e-5, 1.5e-11, -7.0, k, LensMode::red) ==
        doctest::Approx(pi * rho * rho / (1.5e-11 * 1e-5) + 7.0 * j0 * j0));
}

TEST_CASE("paraxial focus cancels the quadratic phase") {
  for (double a : {-1.0, -20.0, -100.0}) {
    const LensSetup s = chromium_setup(a);
    const double f = s.paraxial_focal_length();
    const PhaseModel m = s.phase_model(f);
    const double scale = std::abs(a) * std::pow(s.species.wavenumber(), 2);
    CHECK(std::abs(m.curvature_at_axis()) <= 1e-14 * scale);
    // Finite-difference check of the same property.
    const double h = 1e-10;
    const double d2 = (m(h) - 2 * m(0.0) + m(-h)) / (h * h);
    CHECK(std::abs(d2) < 1e-4 * scale);
  }
  LensSetup blue = chromium_setup(50.0);
  blue.pulse.detuning = 2 * pi * 1e9;
  blue.profile.kind = PhaseKind::blue_j1sq;
  const PhaseModel mb = blue.phase_model(blue.paraxial_focal_length());
  CHECK(std::abs(mb.curvature_at_axis()) <= 1e-14 * 50.0 * std::pow(blue.species.wavenumber(), 2));
}

TEST_CASE("aberration function is flat inside a 0.1 um aperture for A = -1") {
  const LensSetup s = chromium_setup(-1.0);
  const PhaseModel m = s.phase_model(s.paraxial_focal_length());
  const double phi0 = m(0.0);
  for (double rho = 0.0; rho <= 0.1e-6; rho += 0.01e-6) CHECK(std::abs(m(rho) - phi0) < pi / 4);
  CHECK(std::abs(m(0.3e-6) - phi0) > pi);
}

TEST_CASE("batched phase matches the scalar evaluation") {
  const LensSetup s = chromium_setup(-100.0);
  const PhaseModel m = s.phase_model(s.paraxial_focal_length());
  std::vector<double> rho, out(37);
  for (int i = 0; i < 37; ++i) rho.push_back(i * 3e-9);
  m.evaluate(rho, out);
  for (int i = 0; i < 37; ++i) CHECK(out[i] == m(rho[i]));
  CHECK(m.fresnel_term(rho[5]) + m.potential_term(rho[5]) == doctest::Approx(m(rho[5])));
}

TEST_CASE("custom intensity table reproduces the J0 squared lens") {
  LensSetup s = chromium_setup(-100.0);
  const AtomSpecies& cr = s.species;
  const double k = cr.wavenumber();
  // Peak intensity that yields A = -100 through the dipole potential.
  const double i0 = 100.0 * 8.0 * std::abs(s.pulse.detuning) * cr.saturation_intensity /
                    (s.pulse.duration * cr.linewidth * cr.linewidth);
  IntensityTable t;
  for (int i = 0; i <= 400; ++i) {
    const double rho = i * 0.5e-9;
    const double j0 = atomlens::numkernel::bessel_j0(k * rho);
    t.rho.push_back(rho);
    t.intensity.push_back(i0 * j0 * j0);
  }
  const double f = s.paraxial_focal_length();
  const PhaseModel ref = s.phase_model(f);
  const PhaseModel custom = PhaseModel::custom(t, cr, s.pulse.detuning, s.pulse.duration, s.lambda_d(), f);
  CHECK(custom.max_radius() == doctest::Approx(200e-9));
  for (double rho = 0.0; rho <= 0.19e-6; rho += 7e-9) {
    CHECK(std::abs(custom(rho) - ref(rho)) < 1e-6 * 100.0);
  }
  CHECK_THROWS_AS(custom.curvature_at_axis(), std::logic_error);
  IntensityTable off = t;
  off.rho[0] = 1e-10;
  CHECK_THROWS(PhaseModel::custom(off, cr, s.pulse.detuning, s.pulse.duration, s.lambda_d(), f));
}

TEST_CASE("ideal and free-flight models") {
  CHECK(PhaseModel::ideal()(1e-7) == 0.0);
  const PhaseModel ff = PhaseModel::free_flight(1.5e-11, 2e-5);
  CHECK(ff(1e-7) == doctest::Approx(pi * 1e-14 / (1.5e-11 * 2e-5)));
  CHECK(ff.potential_term(1e-7) == 0.0);
}

TEST_CASE("lens setup validation") {
  LensSetup s = chromium_setup(-100.0);
  CHECK_NOTHROW(s.validate());
  s.aperture_radius = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = chromium_setup(-100.0);
  s.beam_velocity = -1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = chromium_setup(-100.0);
  s.profile.kind = PhaseKind::ideal;
  CHECK_THROWS_AS(s.paraxial_focal_length(), std::logic_error);
}

}  // TEST_SUITE
