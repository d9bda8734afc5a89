#include <doctest.h>

#include <cmath>
#include <random>

#include "bodysphere/errors.hpp"
#include "bodysphere/oracle.hpp"
#include "bodysphere/vswf.hpp"

using namespace bodysphere;

namespace {

const double j1_of_1 = std::sin(1.0) - std::cos(1.0);

struct RandomMode {
  ModeIndex mode;
  Complex k;
  SphericalPoint x;
};

std::vector<RandomMode> random_modes(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<RandomMode> out;
  for (int i = 0; i < count; ++i) {
    ModeIndex md;
    md.n = 1 + static_cast<int>(u(rng) * 8.0);
    md.m = static_cast<int>(u(rng) * (md.n + 1));
    md.parity = u(rng) < 0.5 ? Parity::Even : Parity::Odd;
    const Complex k = std::polar(1.0 + 30.0 * u(rng), 0.05 * u(rng));
    const double r = (0.5 + 15.0 * u(rng)) / std::abs(k);
    out.push_back({md, k, SphericalPoint(r, 0.15 + (kPi - 0.3) * u(rng), 2.0 * kPi * u(rng))});
  }
  return out;
}

double step_for(const RandomMode& s) { return std::min(1.0 / std::abs(s.k), s.x.r() / (s.mode.n + 1)); }

}  // namespace

TEST_CASE("scalar generating function examples") {
  CHECK(scalar_psi({0, 0, Parity::Even}, RadialKind::BesselJ, 3.0, SphericalPoint(0.0, 0.3, 0.2)) == Complex(1.0));
  CHECK(std::abs(scalar_psi({1, 0, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, kPi / 2.0, 0.0))) < 1e-16);
  CHECK(scalar_psi({1, 1, Parity::Odd}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, kPi / 2.0, kPi / 2.0)).real() ==
        doctest::Approx(0.3011686789).epsilon(1e-10));
  CHECK_THROWS_AS(scalar_psi({1, 0, Parity::Even}, RadialKind::Hankel1, 1.0, SphericalPoint(0.0, 0.3, 0.0)), DomainError);
}

TEST_CASE("gradient L") {
  const Complex k(4.0, 0.2);
  const SphericalPoint x(0.7, 1.1, 2.0);
  const Vector3c l = vector_L({0, 0, Parity::Even}, RadialKind::BesselJ, k, x);
  CHECK(std::abs(l(0) + k * spherical_bessel(RadialKind::BesselJ, 1, k * 0.7).value) < 1e-14);
  CHECK(std::abs(l(1)) < 1e-15);
  CHECK(std::abs(l(2)) < 1e-15);
  CHECK(std::abs(vector_L({1, 0, Parity::Even}, RadialKind::BesselJ, k, SphericalPoint(0.7, kPi / 2.0, 0.3))(0)) < 1e-15);

  double worst = 0.0;
  for (const auto& s : random_modes(40, 1)) {
    const ModeIndex md{s.mode.n - 1, std::min(s.mode.m, s.mode.n - 1), s.mode.parity};
    const oracle::ScalarField psi = [&](const Eigen::Vector3d& p) {
      return scalar_psi(md, RadialKind::Hankel1, s.k, SphericalPoint::from_cartesian(p));
    };
    const Vector3c fd = oracle::gradient(psi, s.x.cartesian(), 1e-5 * s.x.r());
    const Vector3c an = to_cartesian(vector_L(md, RadialKind::Hankel1, s.k, s.x), s.x);
    worst = std::max(worst, (fd - an).norm() / an.norm());
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("M examples") {
  for (const auto& s : random_modes(20, 2)) CHECK(vector_M(s.mode, RadialKind::Hankel1, s.k, s.x)(0) == Complex(0.0));
  const Vector3c m = vector_M({1, 0, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, kPi / 2.0, 0.0));
  CHECK(m(2).real() == doctest::Approx(j1_of_1).epsilon(1e-12));
  CHECK(m(2).real() == doctest::Approx(0.3011686789).epsilon(1e-10));
  CHECK_THROWS_AS(vector_M({0, 0, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, 1.0, 0.0)), IndexError);
  CHECK_THROWS_AS(vector_N({0, 0, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, 1.0, 0.0)), IndexError);
  CHECK_THROWS_AS(vector_M({2, 3, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(1.0, 1.0, 0.0)), IndexError);
  CHECK_THROWS_AS(vector_N({1, 0, Parity::Even}, RadialKind::BesselJ, 1.0, SphericalPoint(0.0, 1.0, 0.0)), DomainError);
}

TEST_CASE("N tangential components vanish at the pole for m = 0") {
  for (double pole : {0.0, kPi}) {
    const Vector3c nv = vector_N({1, 0, Parity::Even}, RadialKind::BesselJ, 2.0, SphericalPoint(0.8, pole, 0.0));
    CHECK(nv(1) == Complex(0.0));
    CHECK(nv(2) == Complex(0.0));
    CHECK(std::abs(nv(0)) > 0.1);
  }
}

TEST_CASE("duality and divergence by finite differences") {
  double worst_curl = 0.0, worst_div = 0.0;
  for (const auto& s : random_modes(60, 3))
    for (RadialKind kind : {RadialKind::BesselJ, RadialKind::Hankel1}) {
      auto fm = oracle::cartesian_view([&](const SphericalPoint& p) { return vector_M(s.mode, kind, s.k, p); });
      auto fn = oracle::cartesian_view([&](const SphericalPoint& p) { return vector_N(s.mode, kind, s.k, p); });
      const Eigen::Vector3d p = s.x.cartesian();
      const double h = 1e-3 * step_for(s);
      const Vector3c m = fm(p), n = fn(p);
      const double scale = std::max(m.norm(), n.norm());
      worst_curl = std::max({worst_curl, (oracle::curl(fn, p, h) / s.k - m).norm() / scale,
                             (oracle::curl(fm, p, h) / s.k - n).norm() / scale});
      worst_div = std::max({worst_div, std::abs(oracle::divergence(fm, p, h)) / (std::abs(s.k) * scale),
                            std::abs(oracle::divergence(fn, p, h)) / (std::abs(s.k) * scale)});
    }
  CHECK(worst_curl < 1e-4);
  CHECK(worst_div < 1e-4);
}

TEST_CASE("L is curl free") {
  double worst = 0.0;
  for (const auto& s : random_modes(30, 4)) {
    auto fl = oracle::cartesian_view([&](const SphericalPoint& p) { return vector_L(s.mode, RadialKind::BesselJ, s.k, p); });
    const Eigen::Vector3d p = s.x.cartesian();
    const double h = 1e-3 * step_for(s);
    worst = std::max(worst, oracle::curl(fl, p, h).norm() / (std::abs(s.k) * fl(p).norm()));
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("Helmholtz residual with second-order stencils") {
  double worst = 0.0;
  for (const auto& s : random_modes(100, 5)) {
    const double k2 = std::norm(s.k);
    const double h = 1e-3 * step_for(s);
    const Eigen::Vector3d p = s.x.cartesian();
    const oracle::ScalarField psi = [&](const Eigen::Vector3d& q) {
      return scalar_psi(s.mode, RadialKind::BesselJ, s.k, SphericalPoint::from_cartesian(q));
    };
    auto fm = oracle::cartesian_view([&](const SphericalPoint& q) { return vector_M(s.mode, RadialKind::BesselJ, s.k, q); });
    auto fn = oracle::cartesian_view([&](const SphericalPoint& q) { return vector_N(s.mode, RadialKind::BesselJ, s.k, q); });
    // local magnitude: value or first-derivative size, whichever is larger
    const double sp = std::max(std::abs(psi(p)), oracle::gradient(psi, p, h).norm() / std::abs(s.k));
    const double sm = std::max(fm(p).norm(), fn(p).norm());
    worst = std::max({worst, std::abs(oracle::laplacian(psi, p, h, 2) + s.k * s.k * psi(p)) / (k2 * sp),
                      (oracle::vector_laplacian(fm, p, h, 2) + s.k * s.k * fm(p)).norm() / (k2 * sm),
                      (oracle::vector_laplacian(fn, p, h, 2) + s.k * s.k * fn(p)).norm() / (k2 * sm)});
  }
  CHECK(worst <= 1e-3);
}

TEST_CASE("azimuthal orthogonality of M") {
  const int n = 5, samples = 64;
  const Complex k = 3.0;
  for (int m = 0; m <= n; ++m)
    for (int q = m + 1; q <= n; ++q) {
      Complex cross = 0.0;
      double nm = 0.0, nq = 0.0;
      for (int i = 0; i < samples; ++i) {
        const SphericalPoint x(1.3, 0.9, 2.0 * kPi * i / samples);
        const Vector3c a = vector_M({n, m, Parity::Even}, RadialKind::BesselJ, k, x);
        const Vector3c b = vector_M({n, q, Parity::Even}, RadialKind::BesselJ, k, x);
        cross += a.dot(b);
        nm += a.squaredNorm();
        nq += b.squaredNorm();
      }
      CHECK(std::abs(cross) <= 1e-8 * std::sqrt(nm * nq));
    }
}
