#include <doctest.h>

#include <cmath>
#include <random>

#include "bodysphere/errors.hpp"
#include "bodysphere/field.hpp"
#include "bodysphere/greens.hpp"
#include "bodysphere/oracle.hpp"

using namespace bodysphere;

namespace {

SphereScenario matched() { return {0.15, reference_air(), reference_air(), 1e9}; }

double rel(const Dyadic& a, const Dyadic& b) { return (a - b).norm() / b.norm(); }

TruncationSpec fixed(int q) {
  TruncationSpec t;
  t.mode = SeriesMode::Fixed;
  t.max_order_q = q;
  t.max_azimuthal_l = q;
  return t;
}

}  // namespace

TEST_CASE("starting order") {
  CHECK(starting_order(0.0) == 2);
  CHECK(starting_order(8.0) == static_cast<int>(std::ceil(8.0 + 4.0 * 2.0 + 2.0)));
  CHECK(starting_order(20.953) == static_cast<int>(std::ceil(20.953 + 4.0 * std::cbrt(20.953) + 2.0)));
}

TEST_CASE("truncation validation") {
  TruncationSpec t;
  t.max_order_q = 0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
  t = TruncationSpec{};
  t.max_azimuthal_l = t.max_order_q + 1;
  CHECK_THROWS_AS(t.validate(), ValidationError);
  t = TruncationSpec{};
  t.rel_tol = 0.0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
}

TEST_CASE("direct series equals the closed-form free-space dyadic") {
  const Complex k = 20.95315144;
  const TruncationSpec t;
  const std::vector<std::pair<SphericalPoint, SphericalPoint>> pairs = {
      {SphericalPoint(0.05, 0.4, 0.1), SphericalPoint(0.02, 2.0, 1.0)},
      {SphericalPoint(0.3, 1.2, 5.0), SphericalPoint(0.6, 0.7, 3.0)},
      {SphericalPoint(0.9, 2.8, 0.2), SphericalPoint(0.3, 0.1, 4.0)},
      {SphericalPoint(0.4, 0.0, 0.0), SphericalPoint(0.2, kPi, 0.0)},
  };
  for (const auto& [x, x0] : pairs) {
    const double kr = std::abs(k) * distance(x, x0);
    CHECK(kr >= 0.5);
    CHECK(kr <= 30.0);
    const Dyadic g = direct_dgf(k, x, x0, t);
    CHECK(rel(g, oracle::free_space_dyadic_exact(k, x, x0)) < 1e-6);
    CHECK(rel(g, oracle::free_space_dyadic(k, x, x0)) < 1e-6);
    CHECK((g - direct_dgf(k, x0, x, t).transpose()).norm() <= 1e-8 * g.norm());
  }
  // lossy medium
  const Complex kl(60.0, 8.0);
  const SphericalPoint a(0.1, 1.0, 0.5), b(0.2, 1.9, 2.0);
  CHECK(rel(direct_dgf(kl, a, b, t), oracle::free_space_dyadic_exact(kl, a, b)) < 1e-6);
}

TEST_CASE("far field decays as 1/R") {
  const Complex k = 1.0;
  TruncationSpec t;
  t.max_order_q = 200;
  t.max_azimuthal_l = 200;
  const SphericalPoint x0(1.0, kPi / 2.0, 0.0);
  const Eigen::Vector3d u = SphericalPoint(1.0, 1.0, 0.7).cartesian();
  auto at = [&](double r) {
    const SphericalPoint x = SphericalPoint::from_cartesian(x0.cartesian() + r * u);
    return dyadic_to_cartesian(direct_dgf(k, x, x0, t), x, x0);
  };
  const Dyadic g1 = at(50.0), g2 = at(100.0);
  CHECK(g2.norm() / g1.norm() == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("matched media: nothing is scattered") {
  const SphereScenario s = matched();
  // a common fixed order, so the direct and transmitted series stop together
  const TruncationSpec t = fixed(60);
  const SphericalPoint in_a(0.05, 0.3, 0.0), in_b(0.11, 2.0, 1.0), out_a(0.2, 1.0, 2.0), out_b(0.4, 2.5, 4.0);
  const Complex k = s.k_exterior();
  auto direct = [&](const SphericalPoint& x, const SphericalPoint& x0) { return direct_dgf(k, x, x0, t); };
  auto small = [](const Dyadic& a, const Dyadic& ref) {
    return a.cwiseAbs().maxCoeff() < 1e-10 * ref.cwiseAbs().maxCoeff();
  };
  CHECK(small(scattered_dgf(s, PlacementCase::Case11, in_a, in_b, t), direct(in_a, in_b)));
  CHECK(small(scattered_dgf(s, PlacementCase::Case22, out_a, out_b, t), direct(out_a, out_b)));
  // across the interface the transmitted series is the whole field; it must equal the direct term
  CHECK(small(scattered_dgf(s, PlacementCase::Case21, out_a, in_a, t) - direct(out_a, in_a), direct(out_a, in_a)));
  CHECK(small(scattered_dgf(s, PlacementCase::Case12, in_b, out_b, t) - direct(in_b, out_b), direct(in_b, out_b)));
  CHECK(rel(total_dgf(s, out_b, in_a, t), oracle::free_space_dyadic_exact(k, out_b, in_a)) < 1e-6);
}

TEST_CASE("errors") {
  const SphereScenario s = reference_scenario();
  const TruncationSpec t;
  const SphericalPoint x(0.2, 1.0, 1.0);
  CHECK_THROWS_AS(total_dgf(s, x, x, t), CoincidentPointError);
  CHECK_THROWS_AS(total_dgf(s, SphericalPoint(0.15 * (1.0 + 1e-7), 1.0, 0.0), x, t), InterfaceError);
  CHECK_THROWS_AS(scattered_dgf(s, PlacementCase::Case11, x, SphericalPoint(0.3, 0.2, 0.0), t), ValidationError);
  CHECK_THROWS_AS(direct_dgf(s.k_body(), SphericalPoint(0.0, 0.0, 0.0), x, t), DomainError);
  const SphereGreens g(s, t);
  CHECK_THROWS_AS(g.evaluate(GreensPart::Direct, SphericalPoint(0.1, 1.0, 0.0), x), ValidationError);

  TruncationSpec tiny;
  tiny.max_order_q = 10;
  tiny.max_azimuthal_l = 10;
  try {
    total_dgf(s, SphericalPoint(0.18, kPi / 6.0, 0.3), SphericalPoint(0.16, kPi / 2.0, 0.0), tiny);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.order() == 10);
    CHECK(e.residual() > 1e-8);
  }
}

TEST_CASE("series contract: Cauchy stop, and doubling Q changes nothing") {
  const SphereScenario s = reference_scenario();
  const SphericalPoint x(0.18, kPi / 6.0, 0.4), x0(0.16, kPi / 2.0, 0.0);
  TruncationSpec t;
  SeriesInfo info;
  const Dyadic g = scattered_dgf(s, PlacementCase::Case22, x, x0, t, &info);
  CHECK(info.start_order == starting_order(std::abs(s.k_body()) * s.radius()));
  CHECK(info.orders_used >= info.start_order);
  CHECK(info.orders_used <= t.max_order_q);
  CHECK(info.last_relative_change <= t.rel_tol);

  TruncationSpec t2 = t;
  t2.max_order_q = 2 * t.max_order_q;
  t2.max_azimuthal_l = 2 * t.max_azimuthal_l;
  CHECK(rel(scattered_dgf(s, PlacementCase::Case22, x, x0, t2), g) < t.rel_tol);
  // exhaustive sum to Q: the dropped tail is below tolerance
  CHECK(rel(scattered_dgf(s, PlacementCase::Case22, x, x0, fixed(120)), g) < 1e-6);
}

TEST_CASE("reciprocity in all four placement cases") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, TruncationSpec{});
  const std::vector<SphericalPoint> inside = {SphericalPoint(0.05, 0.8, 0.3), SphericalPoint(0.11, 2.2, 4.0)};
  const std::vector<SphericalPoint> outside = {SphericalPoint(0.2, 1.3, 1.0), SphericalPoint(0.35, 0.5, 5.5)};
  auto check_pair = [&](const SphericalPoint& x, const SphericalPoint& x0) {
    const Dyadic a = g.evaluate(GreensPart::Total, x, x0);
    const Dyadic b = g.evaluate(GreensPart::Total, x0, x);
    CHECK(rel(b.transpose(), a) < 1e-6);
  };
  check_pair(inside[0], inside[1]);
  check_pair(outside[0], outside[1]);
  check_pair(outside[0], inside[1]);  // Case21 <-> Case12
  check_pair(inside[0], outside[1]);
}

TEST_CASE("reciprocity with unequal permeability carries the mu weights") {
  Medium body = reference_body();
  body.permeability *= 2.0;
  const SphereScenario s(0.15, body, reference_air(), 1e9);
  const SphereGreens g(s, TruncationSpec{});
  const SphericalPoint x(0.25, 1.0, 0.5), x0(0.07, 2.0, 3.0);
  const Dyadic a = g.evaluate(GreensPart::Total, x, x0);
  const Dyadic b = g.evaluate(GreensPart::Total, x0, x);
  CHECK(rel(s.mu_at(x.r()) * b.transpose(), s.mu_at(x0.r()) * a) < 1e-6);
  // the plain transpose is off by the permeability ratio
  CHECK(rel(b.transpose(), a) > 0.1);
  // same-region pairs are plainly symmetric
  const SphericalPoint y(0.4, 0.3, 1.0);
  CHECK(rel(g.evaluate(GreensPart::Total, x, y), g.evaluate(GreensPart::Total, y, x).transpose()) < 1e-6);
}

TEST_CASE("interface continuity of the total field, Case 22") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, fixed(60));
  const DipoleSource src{SphericalPoint(0.16, kPi / 2.0, 0.0), Vector3c(0.0, 0.0, 1.0)};
  const oracle::SphericalField e = [&](const SphericalPoint& x) { return efield(g, GreensPart::Total, src, x).e; };
  const oracle::InterfaceResidual r = oracle::interface_residual(s, e, e, 16);
  CHECK(r.tangential_e < 1e-6);
  CHECK(r.tangential_h < 1e-4);
}

TEST_CASE("perfect-reflector limit") {
  // A good conductor forces tangential E toward zero like its surface impedance, sqrt(w eps0 / sigma).
  const Medium air = reference_air();
  const DipoleSource src{SphericalPoint(0.25, 1.2, 0.4), Vector3c(0.3, 1.0, -0.5)};
  std::vector<double> ratios;
  for (double sigma : {1.0, 10.0, 100.0, 1000.0}) {
    Medium body = air;
    body.name = "body";
    body.conductivity = sigma;
    const SphereScenario s(0.15, body, air, 1e9);
    const SphereGreens g(s, fixed(60));
    double tan_total = 0.0, tan_direct = 0.0;
    for (const auto& [t, p] : oracle::sphere_samples(16)) {
      const SphericalPoint x(0.15 * (1.0 + 1e-5), t, p);
      const Vector3c et = efield(g, GreensPart::Total, src, x).e;
      const Vector3c ed = efield(g, GreensPart::Direct, src, x).e;
      tan_total = std::max(tan_total, std::hypot(std::abs(et(1)), std::abs(et(2))));
      tan_direct = std::max(tan_direct, std::hypot(std::abs(ed(1)), std::abs(ed(2))));
    }
    ratios.push_back(tan_total / tan_direct);
  }
  MESSAGE("tangential E / incident: " << ratios[0] << " " << ratios[1] << " " << ratios[2] << " " << ratios[3]);
  for (std::size_t i = 1; i < ratios.size(); ++i) CHECK(ratios[i] < ratios[i - 1]);
  CHECK(ratios.back() < 0.05);
}

TEST_CASE("Maxwell residual of the assembled field") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, fixed(50));
  const Vector3c p(0.2, -0.7, 1.0);
  for (const SphericalPoint& x0 : {SphericalPoint(0.08, 1.0, 0.2), SphericalPoint(0.22, 2.0, 1.0)})
    for (const SphericalPoint& x : {SphericalPoint(0.05, 2.1, 3.0), SphericalPoint(0.12, 0.6, 1.5),
                                    SphericalPoint(0.19, 1.4, 4.0), SphericalPoint(0.3, 0.9, 0.5)}) {
      const Complex k = s.k_at(x.r());
      auto e = oracle::cartesian_view([&](const SphericalPoint& q) { return g.evaluate(GreensPart::Total, q, x0) * p; });
      const Eigen::Vector3d c = x.cartesian();
      const double h = 1e-2 / std::abs(k);
      const Vector3c f = e(c);
      const Vector3c res = oracle::curl_curl(e, c, h) - k * k * f;
      CHECK(res.norm() <= 1e-3 * std::norm(k) * f.norm());
    }
}

TEST_CASE("shared evaluator matches the free functions") {
  const SphereScenario s = reference_scenario();
  const TruncationSpec t;
  const SphereGreens g(s, t);
  const SphericalPoint x(0.2, 0.9, 1.0), x0(0.1, 2.0, 0.0);
  CHECK(g.evaluate(GreensPart::Total, x, x0) == total_dgf(s, x, x0, t));
  const CoefficientTable table(s, 120);
  CHECK(total_dgf(s, table, x, x0, t) == total_dgf(s, x, x0, t));
}
