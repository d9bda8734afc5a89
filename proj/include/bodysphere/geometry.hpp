#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bodysphere {

using Complex = std::complex<double>;
/// Complex vector in a local (r, theta, phi) or Cartesian basis.
using Vector3c = Eigen::Vector3cd;
/// 3x3 complex dyadic. Columns index the source basis, rows the field basis.
using Dyadic = Eigen::Matrix3cd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kI{0.0, 1.0};

/// Point in spherical coordinates. phi is wrapped into [0, 2pi) on construction.
class SphericalPoint {
 public:
  SphericalPoint() = default;
  SphericalPoint(double r, double theta, double phi);

  static SphericalPoint from_cartesian(const Eigen::Vector3d& p);

  double r() const { return r_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Eigen::Vector3d cartesian() const;

  /// Columns are the unit vectors r-hat, theta-hat, phi-hat in Cartesian components.
  Eigen::Matrix3d basis() const;

 private:
  double r_ = 0.0;
  double theta_ = 0.0;
  double phi_ = 0.0;
};

/// Vector given in the spherical basis at `at` expressed in Cartesian components.
Vector3c to_cartesian(const Vector3c& spherical, const SphericalPoint& at);
Vector3c to_spherical(const Vector3c& cartesian, const SphericalPoint& at);

/// Dyadic between spherical bases at (x, x0) re-expressed in Cartesian components.
Dyadic dyadic_to_cartesian(const Dyadic& g, const SphericalPoint& x, const SphericalPoint& x0);
Dyadic dyadic_to_spherical(const Dyadic& g, const SphericalPoint& x, const SphericalPoint& x0);

double distance(const SphericalPoint& a, const SphericalPoint& b);

}  // namespace bodysphere
