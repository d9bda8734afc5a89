#include "bodysphere/app/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "bodysphere/errors.hpp"
#include "bodysphere/field.hpp"
#include "bodysphere/greens.hpp"
#include "bodysphere/oracle.hpp"

namespace bodysphere::app {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

WaveFunctionSet library_wave_functions() { return {vector_M, vector_N}; }

namespace {

using Clock = std::chrono::steady_clock;

CheckResult finish(std::string name, double residual, double tolerance, Clock::time_point t0, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && residual <= tolerance;
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  c.detail = std::move(detail);
  return c;
}

CheckResult failed(std::string name, double tolerance, Clock::time_point t0, const std::exception& e) {
  CheckResult c = finish(std::move(name), INFINITY, tolerance, t0, std::string("error: ") + e.what());
  c.passed = false;
  return c;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }
  SphericalPoint direction(double r) {
    return {r, std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2.0 * kPi)};
  }

 private:
  std::mt19937_64 rng_;
};

Complex random_argument(Sampler& s) {
  // Up to |Im z| = |z|; the lower half plane keeps h^(1) and h^(2) both exercised.
  return std::polar(s.log_uniform(0.1, 50.0), s.uniform(-kPi / 2.0, kPi / 2.0));
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

SphereScenario matched_scenario() { return {0.15, reference_air(), reference_air(), 1e9}; }

double rel_frobenius(const Dyadic& a, const Dyadic& b) { return (a - b).norm() / b.norm(); }

std::string worst(const std::string& what) { return "worst at " + what; }

}  // namespace

CheckResult check_bessel_fidelity(int samples, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const char* name = "special functions vs 50-digit oracle";
  try {
    Sampler s(seed);
    double err = 0.0;
    std::string where;
    for (int i = 0; i < samples; ++i) {
      const int n = s.integer(0, 30);
      const Complex z = random_argument(s);
      const Complex j_ref = oracle::series_bessel(n, z);
      const RadialEval j = spherical_bessel(RadialKind::BesselJ, n, z);
      // j_n' = j_{n-1} - (n+1) j_n / z, and j_0' = -j_1
      const Complex dj_ref = n == 0 ? -oracle::series_bessel(1, z)
                                    : oracle::series_bessel(n - 1, z) - static_cast<double>(n + 1) * j_ref / z;
      const double e = std::max({rel(j.value, j_ref), rel(j.derivative, dj_ref),
                                 rel(spherical_bessel(RadialKind::Hankel1, n, z).value,
                                     oracle::hankel_reference(RadialKind::Hankel1, n, z)),
                                 rel(spherical_bessel(RadialKind::Hankel2, n, z).value,
                                     oracle::hankel_reference(RadialKind::Hankel2, n, z))});
      if (e > err) {
        err = e;
        std::ostringstream os;
        os << "n=" << n << " z=" << z;
        where = os.str();
      }
    }
    return finish(name, err, 1e-10, t0, worst(where));
  } catch (const std::exception& e) {
    return failed(name, 1e-10, t0, e);
  }
}

CheckResult check_wronskian(int samples, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const char* name = "Wronskian z^2 (j h' - j' h) = i";
  try {
    Sampler s(seed);
    double err = 0.0;
    for (int i = 0; i < samples; ++i) {
      const int n = s.integer(0, 30);
      const Complex z = random_argument(s);
      const RadialEval j = spherical_bessel(RadialKind::BesselJ, n, z);
      const RadialEval h = spherical_bessel(RadialKind::Hankel1, n, z);
      // both products grow like e^{2 |Im z|} below the real axis; measure against their size
      const double terms = std::max(1.0, std::abs(z * z) * (std::abs(j.value * h.derivative) +
                                                             std::abs(j.derivative * h.value)));
      err = std::max(err, std::abs(z * z * wronskian_check(n, z) - kI) / terms);
    }
    return finish(name, err, 1e-9, t0, std::to_string(samples) + " samples");
  } catch (const std::exception& e) {
    return failed(name, 1e-9, t0, e);
  }
}

CheckResult check_vswf_duality(int points, std::uint64_t seed, const WaveFunctionSet& wf) {
  const auto t0 = Clock::now();
  const char* name = "VSWF duality and divergence (finite differences)";
  try {
    Sampler s(seed);
    double err = 0.0;
    std::string where;
    for (int i = 0; i < points; ++i) {
      const Complex k = std::polar(s.log_uniform(1.0, 120.0), s.uniform(0.0, 0.05));
      ModeIndex md;
      md.n = s.integer(1, 10);
      md.m = s.integer(0, md.n);
      md.parity = s.integer(0, 1) ? Parity::Odd : Parity::Even;
      const RadialKind kind = s.integer(0, 1) ? RadialKind::Hankel1 : RadialKind::BesselJ;
      const double r = s.uniform(0.5, 20.0) / std::abs(k);
      const SphericalPoint x(r, s.uniform(0.1, kPi - 0.1), s.uniform(0.0, 2.0 * kPi));

      auto fm = oracle::cartesian_view([&](const SphericalPoint& p) { return wf.m(md, kind, k, p); });
      auto fn = oracle::cartesian_view([&](const SphericalPoint& p) { return wf.n(md, kind, k, p); });
      const Eigen::Vector3d p = x.cartesian();
      const double h = 1e-3 * std::min(1.0 / std::abs(k), r / (md.n + 1));
      const Vector3c m = fm(p), nv = fn(p);
      const double scale = std::max(m.norm(), nv.norm());
      const double e = std::max({(oracle::curl(fn, p, h) / k - m).norm() / scale,
                                 (oracle::curl(fm, p, h) / k - nv).norm() / scale,
                                 std::abs(oracle::divergence(fm, p, h)) / (std::abs(k) * scale),
                                 std::abs(oracle::divergence(fn, p, h)) / (std::abs(k) * scale)});
      if (!(e <= err)) {
        err = e;
        std::ostringstream os;
        os << "n=" << md.n << " m=" << md.m << " kr=" << std::abs(k) * r;
        where = os.str();
      }
    }
    return finish(name, err, 1e-4, t0, worst(where));
  } catch (const std::exception& e) {
    return failed(name, 1e-4, t0, e);
  }
}

CheckResult check_free_space(int pairs, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const char* name = "matched-media series vs closed-form free-space dyadic";
  try {
    const SphereScenario sc = matched_scenario();
    const Complex k = sc.k_exterior();
    const SphereGreens g(sc, TruncationSpec{});
    Sampler s(seed);
    double err = 0.0;
    int done = 0;
    while (done < pairs) {
      const double r0 = s.uniform(0.03, 1.0);
      const double q = s.uniform(0.2, 0.7);
      const double r = s.integer(0, 1) ? r0 * q : r0 / q;
      if (r < 0.01 || r > 1.0) continue;
      if (std::abs(r - 0.15) < 0.01 || std::abs(r0 - 0.15) < 0.01) continue;
      const SphericalPoint x = s.direction(r), x0 = s.direction(r0);
      const double kr = std::abs(k) * distance(x, x0);
      if (kr < 0.5 || kr > 30.0) continue;
      err = std::max(err, rel_frobenius(g.evaluate(GreensPart::Total, x, x0), oracle::free_space_dyadic_exact(k, x, x0)));
      ++done;
    }
    return finish(name, err, 1e-6, t0, std::to_string(pairs) + " pairs");
  } catch (const std::exception& e) {
    return failed(name, 1e-6, t0, e);
  }
}

CheckResult check_matched_null(int pairs, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const char* name = "matched-media scattered dyadic vanishes";
  try {
    const SphereScenario sc = matched_scenario();
    const SphereGreens g(sc, TruncationSpec{});
    Sampler s(seed);
    double err = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const bool in = i % 2 == 0;
      const double lo = in ? 0.02 : 0.17, hi = in ? 0.13 : 0.6;
      const double r0 = s.uniform(lo, hi);
      double r = s.uniform(lo, hi);
      if (std::max(r, r0) / std::min(r, r0) < 1.25) r = in ? std::max(lo, r0 * 0.7) : r0 * 1.4;
      const SphericalPoint x = s.direction(r), x0 = s.direction(r0);
      const Dyadic gs = g.evaluate(GreensPart::Scattered, x, x0);
      const Dyadic gd = g.evaluate(GreensPart::Direct, x, x0);
      err = std::max(err, gs.cwiseAbs().maxCoeff() / gd.cwiseAbs().maxCoeff());
    }
    return finish(name, err, 1e-10, t0, std::to_string(pairs) + " pairs");
  } catch (const std::exception& e) {
    return failed(name, 1e-10, t0, e);
  }
}

CheckResult check_reciprocity(const SphereScenario& sc, int pairs_per_case, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const char* name = "reciprocity mu(x0) G(x,x0) = mu(x) G(x0,x)^T";
  try {
    const SphereGreens g(sc, TruncationSpec{});
    const double d = sc.radius();
    Sampler s(seed);
    auto radius = [&](bool in) { return in ? s.uniform(0.15, 0.85) * d : s.uniform(1.15, 3.0) * d; };
    double err = 0.0;
    std::string where;
    for (int c = 0; c < 4; ++c) {
      const bool x_in = c == 0 || c == 2, x0_in = c == 0 || c == 1;
      for (int i = 0; i < pairs_per_case; ++i) {
        const double r = radius(x_in);
        double r0 = radius(x0_in);
        if (x_in == x0_in && std::max(r, r0) / std::min(r, r0) < 1.2) r0 = x_in ? r * 0.6 : r * 1.5;
        const SphericalPoint x = s.direction(r), x0 = s.direction(r0);
        const Dyadic a = sc.mu_at(r0) * g.evaluate(GreensPart::Total, x, x0);
        const Dyadic b = sc.mu_at(r) * g.evaluate(GreensPart::Total, x0, x).transpose();
        const double e = rel_frobenius(b, a);
        if (e >= err) {
          err = e;
          where = to_string(classify(sc, r0, r));
        }
      }
    }
    return finish(name, err, 1e-6, t0, worst(where));
  } catch (const std::exception& e) {
    return failed(name, 1e-6, t0, e);
  }
}

std::vector<CheckResult> check_interface(const SphereScenario& sc, int samples, int order_q) {
  const auto t0 = Clock::now();
  const char* ename = "interface continuity, tangential E";
  const char* hname = "interface continuity, tangential H";
  try {
    TruncationSpec t;
    t.mode = SeriesMode::Fixed;
    t.max_order_q = order_q;
    t.max_azimuthal_l = order_q;
    const SphereGreens g(sc, t);
    const double d = sc.radius();
    double ee = 0.0, eh = 0.0;
    std::string we, wh;
    for (double f : {0.4, 0.67, 1.07, 1.67}) {
      const DipoleSource src{SphericalPoint(f * d, 1.1, 0.4), Vector3c(Complex(1.0, 0.0), Complex(0.0, 0.5), -0.3)};
      const oracle::SphericalField field = [&](const SphericalPoint& x) {
        return efield(g, GreensPart::Total, src, x).e;
      };
      const oracle::InterfaceResidual res = oracle::interface_residual(sc, field, field, samples);
      std::ostringstream os;
      os << "source r=" << f * d;
      if (res.tangential_e >= ee) { ee = res.tangential_e; we = os.str(); }
      if (res.tangential_h >= eh) { eh = res.tangential_h; wh = os.str(); }
    }
    return {finish(ename, ee, 1e-6, t0, worst(we)), finish(hname, eh, 1e-4, t0, worst(wh))};
  } catch (const std::exception& e) {
    return {failed(ename, 1e-6, t0, e), failed(hname, 1e-4, t0, e)};
  }
}

VerifyReport verify(VerifyLevel level) {
  const bool full = level == VerifyLevel::Full;
  VerifyReport r;
  r.checks.push_back(check_bessel_fidelity(full ? 200 : 60));
  r.checks.push_back(check_wronskian(full ? 200 : 60));
  r.checks.push_back(check_vswf_duality(full ? 100 : 30));
  r.checks.push_back(check_free_space(full ? 50 : 15));
  r.checks.push_back(check_matched_null(full ? 20 : 10));
  r.checks.push_back(check_reciprocity(reference_scenario(), full ? 5 : 2));
  for (auto& c : check_interface(reference_scenario(), full ? 16 : 8)) r.checks.push_back(std::move(c));
  return r;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(54) << c.name << std::right
        << " residual " << std::scientific << std::setprecision(2) << c.residual << " <= " << c.tolerance
        << std::defaultfloat << std::fixed << std::setprecision(2) << "  (" << c.seconds << " s)" << std::defaultfloat;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
}

}  // namespace bodysphere::app
