#pragma once

// Scalar generating function psi = z_n(kr) P_n^m(cos t) {cos|sin}(m phi) and the
// vector spherical wave functions L = grad psi, M = curl(r psi), N = curl M / k.
// Vector results are components in the local (r, theta, phi) basis.

#include "bodysphere/geometry.hpp"
#include "bodysphere/specfun.hpp"

namespace bodysphere {

enum class Parity { Even, Odd };  // cos(m phi), sin(m phi)

struct ModeIndex {
  int n = 0;
  int m = 0;
  Parity parity = Parity::Even;
};

Complex scalar_psi(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x);
Vector3c vector_L(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x);
Vector3c vector_M(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x);
Vector3c vector_N(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x);

namespace detail {

/// Angular part of one (n, m) mode at a point.
struct AngularFactors {
  double p;           // P_n^m
  double dp;          // dP_n^m / dtheta
  double mp_over_sin; // m P_n^m / sin theta
  double cos_mphi;
  double sin_mphi;
};

/// Radial part of one order n at rho = k r.
struct RadialFactors {
  Complex z;            // z_n(rho)
  Complex z_over_rho;   // z_n(rho) / rho
  Complex ricc_over_rho;// [rho z_n(rho)]' / rho
};

inline RadialFactors radial_factors(const RadialEval& e, Complex rho) {
  return {e.value, e.value / rho, e.riccati_derivative / rho};
}

/// Real angular vector of M: M = z_n(rho) * m_angular.
inline Eigen::Vector3d m_angular(Parity parity, const AngularFactors& a) {
  if (parity == Parity::Even) return {0.0, -a.mp_over_sin * a.sin_mphi, -a.dp * a.cos_mphi};
  return {0.0, a.mp_over_sin * a.cos_mphi, -a.dp * a.sin_mphi};
}

/// Real angular vector of N: N = diag(z/rho, (rho z)'/rho, (rho z)'/rho) * n_angular.
inline Eigen::Vector3d n_angular(Parity parity, int n, const AngularFactors& a) {
  const double nn1 = static_cast<double>(n) * (n + 1);
  if (parity == Parity::Even) return {nn1 * a.p * a.cos_mphi, a.dp * a.cos_mphi, -a.mp_over_sin * a.sin_mphi};
  return {nn1 * a.p * a.sin_mphi, a.dp * a.sin_mphi, a.mp_over_sin * a.cos_mphi};
}

inline Vector3c m_vector(Parity parity, Complex z, const AngularFactors& a) {
  return z * m_angular(parity, a).cast<Complex>();
}

inline Vector3c n_vector(Parity parity, int n, const RadialFactors& rf, const AngularFactors& a) {
  const Eigen::Vector3d b = n_angular(parity, n, a);
  return {rf.z_over_rho * b(0), rf.ricc_over_rho * b(1), rf.ricc_over_rho * b(2)};
}

}  // namespace detail
}  // namespace bodysphere
