#include <doctest.h>

#include <cmath>

#include "bodysphere/errors.hpp"
#include "bodysphere/field.hpp"
#include "bodysphere/oracle.hpp"

using namespace bodysphere;

namespace {

TruncationSpec fixed(int q) {
  TruncationSpec t;
  t.mode = SeriesMode::Fixed;
  t.max_order_q = q;
  t.max_azimuthal_l = q;
  return t;
}

SphereScenario matched() { return {0.15, reference_air(), reference_air(), 1e9}; }

const DipoleSource kArmSource{SphericalPoint(0.16, kPi / 2.0, 0.0), Vector3c(0.0, 0.0, 1.0)};

}  // namespace

TEST_CASE("dB conversion") {
  CHECK(to_db(1.0) == 0.0);
  CHECK(to_db(10.0) == doctest::Approx(20.0));
  CHECK(to_db(0.0) == kDbFloor);
  CHECK(to_db(1e-20) == kDbFloor);
  double prev = to_db(0.0);
  for (double v : {1e-16, 1e-9, 1e-3, 0.5, 1.0, 7.0, 1e6}) {
    CHECK(to_db(v) >= prev);
    prev = to_db(v);
  }
  const FieldSample s = make_sample(SphericalPoint(1.0, 1.0, 1.0), Vector3c(3.0, 0.0, Complex(0.0, 4.0)));
  CHECK(s.mag_total_db == doctest::Approx(20.0 * std::log10(5.0)));
  CHECK(s.mag_phi_db == doctest::Approx(20.0 * std::log10(4.0)));
}

TEST_CASE("matched media: z dipole equals the Hertzian dipole field") {
  const SphereScenario s = matched();
  const Complex k = s.k_exterior();
  const Complex eps = s.exterior().complex_permittivity(1e9);
  const TruncationSpec t;
  const SphericalPoint x0(0.05, 0.0, 0.0);
  // unit z moment expressed in the local basis at x0 (on the axis: r-hat = z)
  const DipoleSource src{x0, Vector3c(1.0, 0.0, 0.0)};
  for (const SphericalPoint& x : {SphericalPoint(0.12, 0.7, 0.0), SphericalPoint(0.3, 1.6, 2.0), SphericalPoint(1.2, 2.5, 4.0)}) {
    const double kr = std::abs(k) * distance(x, x0);
    CHECK(kr >= 1.0);
    CHECK(kr <= 30.0);
    const Vector3c ref = oracle::hertzian_dipole_field(k, s.omega(), eps, x, x0, src.moment);
    CHECK((efield(s, src, x, t).e - ref).norm() < 1e-6 * ref.norm());
  }
}

TEST_CASE("linearity and superposition in the moment") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, TruncationSpec{});
  const SphericalPoint x(0.25, 0.7, 1.1);
  const Vector3c p1(0.2, Complex(0.0, 1.0), -0.4), p2(1.0, 0.3, Complex(0.5, 0.5));
  const Vector3c e1 = efield(g, GreensPart::Total, {kArmSource.position, p1}, x).e;
  const Vector3c e2 = efield(g, GreensPart::Total, {kArmSource.position, p2}, x).e;
  const Vector3c e12 = efield(g, GreensPart::Total, {kArmSource.position, p1 + p2}, x).e;
  const Vector3c e1x2 = efield(g, GreensPart::Total, {kArmSource.position, 2.0 * p1}, x).e;
  CHECK((e1x2 - 2.0 * e1).norm() <= 1e-15 * e1.norm());
  CHECK((e12 - e1 - e2).norm() <= 1e-10 * e12.norm());
}

TEST_CASE("scattered E_phi at the reference geometry is finite and nonzero") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, TruncationSpec{});
  for (int i = 0; i < 36; ++i) {
    const SphericalPoint x(0.18, kPi / 6.0, 2.0 * kPi * i / 36.0);
    const FieldSample f = efield(g, GreensPart::Scattered, kArmSource, x);
    CHECK(std::isfinite(std::abs(f.e(2))));
    CHECK(std::abs(f.e(2)) > 0.0);
    CHECK(f.mag_phi_db > kDbFloor);
  }
  const FieldSample a = scattered_efield(s, kArmSource, SphericalPoint(0.18, kPi / 6.0, 1.0), TruncationSpec{});
  const FieldSample b = efield(g, GreensPart::Scattered, kArmSource, SphericalPoint(0.18, kPi / 6.0, 1.0));
  CHECK(a.e == b.e);
}

TEST_CASE("matched media: scattered field sits at the dB floor") {
  const SphereScenario s = matched();
  const FieldSample f = scattered_efield(s, kArmSource, SphericalPoint(0.18, 1.0, 2.0), TruncationSpec{});
  CHECK(f.mag_total_db == kDbFloor);
  CHECK(f.mag_phi_db == kDbFloor);
}

TEST_CASE("total minus scattered is the direct field") {
  const SphereScenario s = reference_scenario();
  const TruncationSpec t = fixed(60);
  const SphereGreens g(s, t);
  for (const auto& [src, x] : {std::pair{kArmSource, SphericalPoint(0.25, 1.0, 0.3)},
                               std::pair{DipoleSource{SphericalPoint(0.05, 1.0, 0.0), Vector3c(1.0, 0.0, 0.5)},
                                         SphericalPoint(0.12, 2.0, 1.0)}}) {
    const Vector3c d = efield(s, src, x, t).e - scattered_efield(s, src, x, t).e;
    const Vector3c ref = efield(g, GreensPart::Direct, src, x).e;
    CHECK((d - ref).norm() <= 1e-10 * ref.norm());
  }
}

TEST_CASE("joint rotation about z leaves the field unchanged") {
  const SphereScenario s = reference_scenario();
  const SphereGreens g(s, TruncationSpec{});
  const Vector3c p(0.3, -1.0, Complex(0.0, 0.6));
  const SphericalPoint x0(0.16, 1.3, 0.2), x(0.21, 0.6, 2.0);
  const Vector3c e = efield(g, GreensPart::Total, {x0, p}, x).e;
  for (double dphi : {0.7, 2.9, 5.5}) {
    const SphericalPoint y0(x0.r(), x0.theta(), x0.phi() + dphi), y(x.r(), x.theta(), x.phi() + dphi);
    const Vector3c f = efield(g, GreensPart::Total, {y0, p}, y).e;
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(dphi, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    const Vector3c rotated = to_spherical(rot.cast<Complex>() * to_cartesian(e, x), y);
    CHECK((rotated - f).norm() <= 1e-8 * f.norm());
    for (int i = 0; i < 3; ++i) CHECK(std::abs(std::abs(f(i)) - std::abs(e(i))) <= 1e-8 * e.norm());
  }
}

TEST_CASE("source permeability sets the field scale") {
  Medium body = reference_body();
  body.permeability *= 3.0;
  const SphereScenario s(0.15, body, reference_air(), 1e9);
  const SphereGreens g(s, TruncationSpec{});
  const DipoleSource src{SphericalPoint(0.05, 1.0, 0.0), Vector3c(0.0, 1.0, 0.0)};
  const SphericalPoint x(0.1, 2.0, 1.0);
  const Vector3c e = efield(g, GreensPart::Total, src, x).e;
  const Vector3c ref = kI * s.omega() * body.permeability * (g.evaluate(GreensPart::Total, x, src.position) * src.moment);
  CHECK((e - ref).norm() <= 1e-14 * ref.norm());
}
