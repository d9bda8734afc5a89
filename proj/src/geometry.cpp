#include "bodysphere/geometry.hpp"

#include <cmath>

#include "bodysphere/errors.hpp"

namespace bodysphere {

SphericalPoint::SphericalPoint(double r, double theta, double phi) : r_(r), theta_(theta) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ValidationError("spherical point: r must be finite and >= 0");
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("spherical point: theta must lie in [0, pi]");
  if (!std::isfinite(phi)) throw ValidationError("spherical point: phi must be finite");
  phi_ = std::fmod(phi, 2.0 * kPi);
  if (phi_ < 0.0) phi_ += 2.0 * kPi;
  if (phi_ >= 2.0 * kPi) phi_ = 0.0;
}

SphericalPoint SphericalPoint::from_cartesian(const Eigen::Vector3d& p) {
  const double rho = std::hypot(p.x(), p.y());
  const double r = p.norm();
  const double theta = std::atan2(rho, p.z());
  const double phi = std::atan2(p.y(), p.x());
  return {r, theta, phi};
}

Eigen::Vector3d SphericalPoint::cartesian() const {
  const double st = std::sin(theta_);
  return {r_ * st * std::cos(phi_), r_ * st * std::sin(phi_), r_ * std::cos(theta_)};
}

Eigen::Matrix3d SphericalPoint::basis() const {
  const double st = std::sin(theta_), ct = std::cos(theta_);
  const double sp = std::sin(phi_), cp = std::cos(phi_);
  Eigen::Matrix3d b;
  b << st * cp, ct * cp, -sp,
       st * sp, ct * sp, cp,
       ct, -st, 0.0;
  return b;
}

Vector3c to_cartesian(const Vector3c& spherical, const SphericalPoint& at) {
  return at.basis().cast<Complex>() * spherical;
}

Vector3c to_spherical(const Vector3c& cartesian, const SphericalPoint& at) {
  return at.basis().transpose().cast<Complex>() * cartesian;
}

Dyadic dyadic_to_cartesian(const Dyadic& g, const SphericalPoint& x, const SphericalPoint& x0) {
  return x.basis().cast<Complex>() * g * x0.basis().transpose().cast<Complex>();
}

Dyadic dyadic_to_spherical(const Dyadic& g, const SphericalPoint& x, const SphericalPoint& x0) {
  return x.basis().transpose().cast<Complex>() * g * x0.basis().cast<Complex>();
}

double distance(const SphericalPoint& a, const SphericalPoint& b) {
  return (a.cartesian() - b.cartesian()).norm();
}

}  // namespace bodysphere
