#include <cmath>

#include "bodysphere/errors.hpp"
#include "bodysphere/oracle.hpp"

namespace bodysphere::oracle {

Complex free_space_scalar(Complex k, double distance) {
  if (!(distance > 0.0)) throw CoincidentPointError("free-space Green's function at R = 0");
  return std::exp(kI * k * distance) / (4.0 * kPi * distance);
}

Dyadic free_space_dyadic_exact(Complex k, const SphericalPoint& x, const SphericalPoint& x0) {
  const Eigen::Vector3d d = x.cartesian() - x0.cartesian();
  const double r = d.norm();
  const Complex g = free_space_scalar(k, r);
  const Eigen::Vector3d u = d / r;
  const Complex kr = k * r;
  const Complex a = 1.0 + kI / kr - 1.0 / (kr * kr);
  const Complex b = -1.0 - 3.0 * kI / kr + 3.0 / (kr * kr);
  const Dyadic cart = g * (a * Dyadic::Identity() + b * (u * u.transpose()).cast<Complex>());
  return dyadic_to_spherical(cart, x, x0);
}

Dyadic free_space_dyadic(Complex k, const SphericalPoint& x, const SphericalPoint& x0, const FDStencil& stencil) {
  const Eigen::Vector3d src = x0.cartesian();
  const double r = (x.cartesian() - src).norm();
  if (!(r > 0.0)) throw CoincidentPointError("free-space dyadic at R = 0");
  const double h = stencil.step * std::min(r, 1.0 / std::abs(k));
  const ScalarField g = [&](const Eigen::Vector3d& p) { return free_space_scalar(k, (p - src).norm()); };
  const Eigen::Matrix3cd hess = hessian(g, x.cartesian(), h, stencil.order);
  const Dyadic cart = g(x.cartesian()) * Dyadic::Identity() + hess / (k * k);
  return dyadic_to_spherical(cart, x, x0);
}

Vector3c hertzian_dipole_field(Complex k, double omega, Complex permittivity, const SphericalPoint& x,
                               const SphericalPoint& x0, const Vector3c& moment) {
  const Eigen::Vector3d d = x.cartesian() - x0.cartesian();
  const double r = d.norm();
  if (!(r > 0.0)) throw CoincidentPointError("dipole field at the source point");
  const Vector3c u = (d / r).cast<Complex>();
  const Vector3c p = kI * to_cartesian(moment, x0) / omega;
  const Complex phase = std::exp(kI * k * r);
  const Complex up = u.dot(p);  // Eigen's dot conjugates the first argument; u is real
  const Vector3c transverse = p - u * up;
  const Vector3c near = 3.0 * u * up - p;
  const Vector3c e = phase / (4.0 * kPi * permittivity) *
                     (k * k * transverse / r + near * (1.0 / (r * r * r) - kI * k / (r * r)));
  return to_spherical(e, x);
}

}  // namespace bodysphere::oracle
