#include "bodysphere/scattering.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "bodysphere/errors.hpp"
#include "bodysphere/format.hpp"

namespace bodysphere {
namespace {

// Solves a (x0, x1)^T = b for a 2x2 complex system. Columns are first scaled by
// powers of two so that widely separated radial magnitudes stay representable.
Eigen::Vector2cd solve2(const Eigen::Vector2cd& c0, const Eigen::Vector2cd& c1, const Eigen::Vector2cd& b, int n) {
  auto pow2_scale = [](const Eigen::Vector2cd& c) {
    const double mag = c.cwiseAbs().maxCoeff();
    if (!(mag > 0.0) || !std::isfinite(mag)) return 1.0;
    return std::ldexp(1.0, -std::ilogb(mag));
  };
  const double s0 = pow2_scale(c0), s1 = pow2_scale(c1);
  const Eigen::Vector2cd a0 = c0 * s0, a1 = c1 * s1;
  const Complex det = a0(0) * a1(1) - a1(0) * a0(1);
  const double scale = a0.norm() * a1.norm();
  if (!(std::abs(det) > 1e-14 * scale) || !std::isfinite(std::abs(det))) {
    std::ostringstream os;
    os << "interface system singular at n=" << n << " (|det|=" << std::abs(det) << ")";
    throw SingularSystemError(os.str());
  }
  const Complex x0 = (b(0) * a1(1) - a1(0) * b(1)) / det;
  const Complex x1 = (a0(0) * b(1) - b(0) * a0(1)) / det;
  const Eigen::Vector2cd x{x0 * s0, x1 * s1};
  if (!std::isfinite(std::abs(x(0))) || !std::isfinite(std::abs(x(1)))) {
    std::ostringstream os;
    os << "interface coefficients overflow at n=" << n;
    throw OverflowError(os.str());
  }
  return x;
}

}  // namespace

BoundaryMatrix bessel_interface_matrix(RadialKind kind, const Medium& medium, int n, Complex k, double d,
                                       double frequency) {
  if (!(d > 0.0)) throw ValidationError("interface matrix: radius must be > 0");
  const Complex rho = k * d;
  const RadialEval e = spherical_bessel_sequence(kind, n, rho)[static_cast<std::size_t>(n)];
  const double w_mu = 2.0 * kPi * frequency * medium.permeability;
  BoundaryMatrix b;
  b(0, 0) = e.riccati_derivative / rho;
  b(1, 0) = k * e.value / w_mu;
  b(0, 1) = e.value;
  b(1, 1) = e.riccati_derivative / (w_mu * d);
  return b;
}

CoeffSet coefficients(const SphereScenario& s, int n) {
  if (n < 1) throw IndexError("coefficients: order n must be >= 1");
  const double d = s.radius(), f = s.frequency();
  const BoundaryMatrix j1 = bessel_interface_matrix(RadialKind::BesselJ, s.body(), n, s.k_body(), d, f);
  const BoundaryMatrix h1 = bessel_interface_matrix(RadialKind::Hankel1, s.body(), n, s.k_body(), d, f);
  const BoundaryMatrix j2 = bessel_interface_matrix(RadialKind::BesselJ, s.exterior(), n, s.k_exterior(), d, f);
  const BoundaryMatrix h2 = bessel_interface_matrix(RadialKind::Hankel1, s.exterior(), n, s.k_exterior(), d, f);
  CoeffSet c;
  c.n = n;
  for (int ch = 0; ch < 2; ++ch) {
    // Source inside: outgoing h(k1) + R12 j(k1) inside matches T12 h(k2) outside.
    const Eigen::Vector2cd in = solve2(j1.col(ch), -h2.col(ch), -h1.col(ch), n);
    // Source outside: standing j(k2) + R21 h(k2) outside matches T21 j(k1) inside.
    const Eigen::Vector2cd out = solve2(h2.col(ch), -j1.col(ch), -j2.col(ch), n);
    c.r12(ch, ch) = in(0);
    c.t12(ch, ch) = in(1);
    c.r21(ch, ch) = out(0);
    c.t21(ch, ch) = out(1);
  }
  return c;
}

CoefficientTable::CoefficientTable(const SphereScenario& scenario, int n_max) : requested_(n_max) {
  if (n_max < 1) throw IndexError("coefficient table: n_max must be >= 1");
  sets_.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    try {
      sets_.push_back(coefficients(scenario, n));
    } catch (const OverflowError&) {
      if (n == 1) throw;
      break;
    }
  }
}

const CoeffSet& CoefficientTable::at(int n) const {
  if (n < 1 || n > n_max()) {
    std::ostringstream os;
    os << "interface coefficients unavailable at order " << n << " (representable up to " << n_max() << ")";
    throw OverflowError(os.str());
  }
  return (*this)[n];
}

void write_coefficients_csv(const CoefficientTable& table, std::ostream& out) {
  out << "n,channel,abs_R,arg_R,abs_T,arg_T\n";
  for (int n = 1; n <= table.n_max(); ++n) {
    const CoeffSet& c = table[n];
    for (int ch = 0; ch < 2; ++ch) {
      const char* name = ch == 0 ? "TM" : "TE";
      const std::pair<const BoundaryMatrix*, const BoundaryMatrix*> dirs[] = {{&c.r12, &c.t12}, {&c.r21, &c.t21}};
      for (int dir = 0; dir < 2; ++dir) {
        const Complex r = (*dirs[dir].first)(ch, ch), t = (*dirs[dir].second)(ch, ch);
        out << n << ',' << name << (dir == 0 ? "12" : "21") << ',' << format_double(std::abs(r)) << ','
            << format_double(std::arg(r)) << ',' << format_double(std::abs(t)) << ',' << format_double(std::arg(t))
            << '\n';
      }
    }
  }
}

}  // namespace bodysphere
