#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bodysphere/errors.hpp"
#include "bodysphere/oracle.hpp"

namespace bodysphere::oracle {
namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Cplx = mp::cpp_complex_50;

Cplx to_mp(Complex z) { return Cplx(Real(z.real()), Real(z.imag())); }
Complex to_double(const Cplx& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

struct SeriesResult {
  Cplx sum;
  bool tail_ok;
};

SeriesResult bessel_series(int n, const Cplx& z, int max_terms) {
  // j_n(z) = z^n sum_k (-z^2/2)^k / (k! (2n+2k+1)!!)
  Cplx term = 1;
  for (int i = 0; i < n; ++i) term *= z;
  Real dfact = 1;
  for (int i = 1; i <= 2 * n + 1; i += 2) dfact *= i;
  term /= dfact;
  Cplx sum = term;
  const Cplx step = -z * z / 2;
  const Real abs_z2 = abs(z) * abs(z);
  for (int k = 0; k + 1 < max_terms; ++k) {
    term *= step / Real((k + 1) * (2 * n + 2 * k + 3));
    sum += term;
    const Real ratio = abs_z2 / Real(2 * (k + 2) * (2 * n + 2 * k + 5));
    if (ratio < 0.5) {
      const Real tail = abs(term) * ratio / (1 - ratio);
      const Real mag = abs(sum);
      if (tail <= Real(1e-14) * mag || (mag == 0 && tail == 0)) return {sum, true};
    }
  }
  return {sum, abs(z) == 0};
}

}  // namespace

Complex series_bessel(int n, Complex z, int terms) {
  if (n < 0) throw IndexError("series_bessel: n must be >= 0");
  if (terms < 1) throw ValidationError("series_bessel: need at least one term");
  const SeriesResult r = bessel_series(n, to_mp(z), terms);
  if (!r.tail_ok) throw ConvergenceError("series_bessel: tail bound not met with the given term count", terms, 1.0);
  return to_double(r.sum);
}

Complex series_bessel(int n, Complex z) {
  return series_bessel(n, z, 20000);
}

Complex hankel_reference(RadialKind kind, int n, Complex z) {
  if (kind == RadialKind::BesselJ) return series_bessel(n, z);
  if (z == 0.0) throw DomainError("hankel_reference: z = 0");
  const Cplx zz = to_mp(z);
  const Cplx i(Real(0), Real(1));
  const Real sgn = kind == RadialKind::Hankel1 ? 1 : -1;
  const Cplx e = exp(sgn * i * zz);
  Cplx h0 = -sgn * i * e / zz;
  Cplx h1 = -e / zz - sgn * i * e / (zz * zz);
  if (n == 0) return to_double(h0);
  for (int k = 1; k < n; ++k) {
    Cplx h2 = Real(2 * k + 1) / zz * h1 - h0;
    h0 = h1;
    h1 = h2;
  }
  return to_double(h1);
}

namespace {

// Coefficients of D^{n+m}[(x^2-1)^n] / (2^n n!) as a polynomial in x.
std::vector<Real> rodrigues_polynomial(int n, int m) {
  std::vector<Real> c(static_cast<std::size_t>(2 * n + 1), Real(0));
  Real binom = 1;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(2 * k)] = ((n - k) % 2 == 0 ? binom : -binom);
    binom = binom * Real(n - k) / Real(k + 1);
  }
  for (int d = 0; d < n + m; ++d) {
    std::vector<Real> next(c.size() > 1 ? c.size() - 1 : 1, Real(0));
    for (std::size_t j = 1; j < c.size(); ++j) next[j - 1] = c[j] * Real(static_cast<int>(j));
    c = std::move(next);
  }
  Real norm = 1;
  for (int k = 1; k <= n; ++k) norm *= Real(2 * k);
  for (auto& v : c) v /= norm;
  return c;
}

Real polyval(const std::vector<Real>& c, const Real& x) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double legendre_rodrigues(int n, int m, double x) {
  if (n < 0 || m < 0 || m > n) throw IndexError("legendre_rodrigues: require 0 <= m <= n");
  const Real xx(x);
  const Real s2 = 1 - xx * xx;
  Real w = 1;
  if (m > 0) w = pow(sqrt(s2 < 0 ? Real(0) : s2), m);
  return static_cast<double>(w * polyval(rodrigues_polynomial(n, m), xx));
}

/// d/dtheta P_n^m(cos theta) by differentiating the Rodrigues form.
double legendre_rodrigues_dtheta(int n, int m, double theta) {
  const Real t(theta);
  const Real x = cos(t), s = sin(t);
  const auto q = rodrigues_polynomial(n, m);
  std::vector<Real> dq(q.size() > 1 ? q.size() - 1 : 1, Real(0));
  for (std::size_t j = 1; j < q.size(); ++j) dq[j - 1] = q[j] * Real(static_cast<int>(j));
  // P = s^m Q(cos t); dP/dt = m s^{m-1} cos t Q - s^{m+1} Q'
  Real result = -pow(s, m + 1) * polyval(dq, x);
  if (m > 0) result += Real(m) * pow(s, m - 1) * x * polyval(q, x);
  return static_cast<double>(result);
}

}  // namespace bodysphere::oracle
