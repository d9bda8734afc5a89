#include "bodysphere/vswf.hpp"

#include <cmath>

#include "bodysphere/errors.hpp"

namespace bodysphere {
namespace {

void check_mode(const ModeIndex& mode, int min_n) {
  if (mode.n < min_n) throw IndexError("wave function: order n too small for this function");
  if (mode.m < 0 || mode.m > mode.n) throw IndexError("wave function: require 0 <= m <= n");
}

detail::AngularFactors angular(const ModeIndex& mode, const SphericalPoint& x) {
  const LegendreEval le = assoc_legendre(mode.n, mode.m, x.theta());
  const double mphi = mode.m * x.phi();
  return {le.value, le.theta_derivative, le.over_sin_theta, std::cos(mphi), std::sin(mphi)};
}

RadialEval radial(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x) {
  if (x.r() <= 0.0) throw DomainError("wave function: vector forms require r > 0");
  return spherical_bessel(kind, mode.n, k * x.r());
}

}  // namespace

Complex scalar_psi(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x) {
  check_mode(mode, 0);
  const Complex rho = k * x.r();
  if (rho == 0.0 && kind != RadialKind::BesselJ) throw DomainError("scalar_psi: Hankel kinds require r > 0");
  const Complex z = spherical_bessel(kind, mode.n, rho).value;
  const auto a = angular(mode, x);
  return z * a.p * (mode.parity == Parity::Even ? a.cos_mphi : a.sin_mphi);
}

Vector3c vector_L(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x) {
  check_mode(mode, 0);
  const RadialEval e = radial(mode, kind, k, x);
  const auto a = angular(mode, x);
  const double r = x.r();
  const bool even = mode.parity == Parity::Even;
  const double trig = even ? a.cos_mphi : a.sin_mphi;
  const double dtrig = even ? -a.sin_mphi : a.cos_mphi;  // d/dphi of trig, over m
  return {k * e.derivative * (a.p * trig), e.value / r * (a.dp * trig), e.value / r * (a.mp_over_sin * dtrig)};
}

Vector3c vector_M(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x) {
  check_mode(mode, 1);
  const RadialEval e = radial(mode, kind, k, x);
  return detail::m_vector(mode.parity, e.value, angular(mode, x));
}

Vector3c vector_N(const ModeIndex& mode, RadialKind kind, Complex k, const SphericalPoint& x) {
  check_mode(mode, 1);
  const RadialEval e = radial(mode, kind, k, x);
  return detail::n_vector(mode.parity, mode.n, detail::radial_factors(e, k * x.r()), angular(mode, x));
}

}  // namespace bodysphere
