#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>

#include "atomlens/numkernel/interpolation.hpp"

namespace atomlens::vector_focus {

using complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<complex, 3>;

/// Real function of the pupil angles (theta, phi).
using AngularFunction = std::function<double(double, double)>;
/// Complex pupil amplitude B(theta, phi).
using ComplexAngularFunction = std::function<complex(double, double)>;

enum class PolarizationMode { radial, azimuthal, linear_x, custom };

/// Incident polarization P0 = (a, b, 0) before the lens.
struct Jones {
  double a = 0.0;
  double b = 0.0;
};

class Polarization {
 public:
  static Polarization radial();
  static Polarization azimuthal();
  static Polarization linear_x();
  static Polarization custom(AngularFunction a, AngularFunction b);
  /// a and b sampled on uniform (theta, phi) lattices, bilinearly interpolated.
  static Polarization custom_table(numkernel::BilinearGrid a, numkernel::BilinearGrid b);

  PolarizationMode mode() const { return mode_; }
  Jones jones(double theta, double phi) const;

 private:
  explicit Polarization(PolarizationMode mode) : mode_(mode) {}

  PolarizationMode mode_;
  AngularFunction a_;
  AngularFunction b_;
};

enum class ApodizationKind { aplanatic, uniform, tabulated, custom };

class Apodization {
 public:
  /// B = sqrt(cos theta).
  static Apodization aplanatic();
  static Apodization uniform();
  /// Real B(theta) from a table, linearly interpolated.
  static Apodization tabulated(numkernel::LinearTable table);
  /// Arbitrary complex B(theta, phi).
  static Apodization custom(ComplexAngularFunction b);

  ApodizationKind kind() const { return kind_; }
  bool depends_on_phi() const { return kind_ == ApodizationKind::custom; }
  complex operator()(double theta, double phi) const;

 private:
  explicit Apodization(ApodizationKind kind) : kind_(kind) {}

  ApodizationKind kind_;
  std::shared_ptr<const numkernel::LinearTable> table_;
  ComplexAngularFunction custom_;
};

/// Optical focusing system: wavelength, convergence semiangle, optional
/// blocked inner cone (annular aperture), pupil polarization and apodization.
struct PupilSpec {
  double wavelength = 1e-6;  ///< meters
  double alpha = 0.0;        ///< convergence semiangle, radians
  double alpha_inner = 0.0;  ///< blocked inner semiangle, radians
  Polarization polarization = Polarization::radial();
  Apodization apodization = Apodization::aplanatic();
  double amplitude = 1.0;  ///< overall field constant C

  /// Throws std::invalid_argument unless 0 < alpha <= pi/2,
  /// 0 <= alpha_inner < alpha and wavelength > 0.
  void validate() const;
  double wavenumber() const;
};

/// Observation point: transverse radius from the optical axis, azimuth, and
/// axial offset from the geometric focus.
struct FocalPoint {
  double r_t = 0.0;
  double phi_c = 0.0;
  double z = 0.0;
};

struct FieldSample {
  complex ex{};
  complex ey{};
  complex ez{};
  /// Quadrature error estimate on the largest component, field units.
  double error = 0.0;

  CVec3 components() const { return {ex, ey, ez}; }
};

/// Polarization of the ray leaving the lens at (theta, phi):
/// P = R^-1 C R P0 with R the rotation about the axis and C the meridional
/// tilt by theta.
Vec3 polarization_vector(double theta, double phi, const PupilSpec& pupil);

}  // namespace atomlens::vector_focus
