#include <algorithm>
#include <cmath>

#include "bodysphere/errors.hpp"
#include "bodysphere/oracle.hpp"

namespace bodysphere::oracle {
namespace {

// Quadratic extrapolation to 0 from samples at offsets 1, 2, 3.
template <class T>
T extrapolate(const T& f1, const T& f2, const T& f3) {
  return 3.0 * f1 - 3.0 * f2 + f3;
}

Eigen::Vector2cd tangential(const Vector3c& v) { return {v(1), v(2)}; }

struct SideValues {
  Vector3c e;
  Vector3c h;
};

SideValues side_at_surface(const SphereScenario& s, const SphericalField& field, double theta, double phi,
                           double sign, double offset) {
  const double d = s.radius();
  const double mu = sign < 0 ? s.body().permeability : s.exterior().permeability;
  const Complex iwmu = kI * s.omega() * mu;
  const VectorField cart = cartesian_view(field);
  // the order-4 stencil spans 2 steps and must stay on its own side of r = d
  const double step = 0.1 * offset * d;
  SideValues v[3];
  for (int j = 1; j <= 3; ++j) {
    const SphericalPoint p(d * (1.0 + sign * j * offset), theta, phi);
    v[j - 1].e = field(p);
    v[j - 1].h = to_spherical(curl(cart, p.cartesian(), step, 4), p) / iwmu;
  }
  return {extrapolate(v[0].e, v[1].e, v[2].e), extrapolate(v[0].h, v[1].h, v[2].h)};
}

struct RadialPair {
  Complex z;
  Complex ricc;  // [rho z_n(rho)]'
};

RadialPair radial(RadialKind kind, int n, Complex rho) {
  const Complex zn = hankel_reference(kind, n, rho);
  const Complex zm = hankel_reference(kind, n - 1, rho);
  return {zn, rho * zm - static_cast<double>(n) * zn};
}

struct Wave {
  Eigen::Vector4cd m;  // tangential (E_theta, E_phi, H_theta, H_phi) of E = M
  Eigen::Vector4cd n;  // same for E = N
};

// Even, m = 1 wave functions on r = d built from the oracle special functions.
Wave surface_wave(const SphereScenario& s, RadialKind kind, bool body, int n, double theta, double phi) {
  const Complex k = body ? s.k_body() : s.k_exterior();
  const double mu = body ? s.body().permeability : s.exterior().permeability;
  const Complex rho = k * s.radius();
  const RadialPair rp = radial(kind, n, rho);
  const double p = legendre_rodrigues(n, 1, std::cos(theta));
  const double dp = legendre_rodrigues_dtheta(n, 1, theta);
  const double mps = p / std::sin(theta);
  const double c = std::cos(phi), sn = std::sin(phi);
  // Tangential parts of M_e1n and N_e1n.
  const Eigen::Vector2cd mt{-rp.z * mps * sn, -rp.z * dp * c};
  const Eigen::Vector2cd nt{rp.ricc / rho * dp * c, -rp.ricc / rho * mps * sn};
  // curl M = k N and curl N = k M, so H = k/(i w mu) times the partner.
  const Complex hf = k / (kI * s.omega() * mu);
  Wave w;
  w.m << mt, hf * nt;
  w.n << nt, hf * mt;
  return w;
}

}  // namespace

std::vector<std::pair<double, double>> sphere_samples(int count) {
  std::vector<std::pair<double, double>> out;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    out.emplace_back(std::acos(z), std::fmod(golden * i, 2.0 * kPi));
  }
  return out;
}

InterfaceResidual interface_residual(const SphereScenario& scenario, const SphericalField& inside,
                                     const SphericalField& outside, int sample_count, double offset) {
  if (sample_count < 1) throw ValidationError("interface_residual: need at least one sample");
  double de = 0.0, dh = 0.0, se = 0.0, sh = 0.0;
  for (const auto& [theta, phi] : sphere_samples(sample_count)) {
    const SideValues in = side_at_surface(scenario, inside, theta, phi, -1.0, offset);
    const SideValues out = side_at_surface(scenario, outside, theta, phi, 1.0, offset);
    de = std::max(de, (tangential(in.e) - tangential(out.e)).norm());
    dh = std::max(dh, (tangential(in.h) - tangential(out.h)).norm());
    se = std::max({se, in.e.norm(), out.e.norm()});
    sh = std::max({sh, in.h.norm(), out.h.norm()});
  }
  return {se > 0.0 ? de / se : de, sh > 0.0 ? dh / sh : dh};
}

ModeAmplitudes solve_interface_modes(const SphereScenario& s, int n, bool source_inside) {
  if (n < 1) throw IndexError("solve_interface_modes: n must be >= 1");
  const double theta = 0.7, phi = 0.3;
  Eigen::Matrix4cd a;
  Eigen::Vector4cd b;
  if (source_inside) {
    const Wave inc = surface_wave(s, RadialKind::Hankel1, true, n, theta, phi);
    const Wave refl = surface_wave(s, RadialKind::BesselJ, true, n, theta, phi);
    const Wave trans = surface_wave(s, RadialKind::Hankel1, false, n, theta, phi);
    a << refl.n, refl.m, -trans.n, -trans.m;
    b = -(inc.n + inc.m);
  } else {
    const Wave inc = surface_wave(s, RadialKind::BesselJ, false, n, theta, phi);
    const Wave refl = surface_wave(s, RadialKind::Hankel1, false, n, theta, phi);
    const Wave trans = surface_wave(s, RadialKind::BesselJ, true, n, theta, phi);
    a << refl.n, refl.m, -trans.n, -trans.m;
    b = -(inc.n + inc.m);
  }
  // Radial magnitudes differ by many decades at high order; equilibrate columns.
  Eigen::Vector4d scale;
  for (int j = 0; j < 4; ++j) {
    scale(j) = 1.0 / a.col(j).norm();
    a.col(j) *= scale(j);
  }
  const Eigen::Vector4cd y = a.fullPivLu().solve(b);
  return {y(0) * scale(0), y(1) * scale(1), y(2) * scale(2), y(3) * scale(3)};
}

}  // namespace bodysphere::oracle
