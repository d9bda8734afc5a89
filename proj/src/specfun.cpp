#include "bodysphere/specfun.hpp"

#include <cmath>
#include <sstream>

#include "bodysphere/errors.hpp"

namespace bodysphere {
namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kOverflowAbove = 1e300;

std::string describe(int n, Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << n << ", z=(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// j_N(z) / j_{N-1}(z) by the modified Lentz evaluation of
//   1/r_N = b_N - 1/(b_{N+1} - 1/(b_{N+2} - ...)),  b_k = (2k+1)/z.
Complex bessel_ratio(int N, Complex z) {
  constexpr double tiny = 1e-300;
  auto b = [&](int k) { return static_cast<double>(2 * k + 1) / z; };
  Complex f = b(N);
  if (f == 0.0) f = tiny;
  Complex c = f;
  Complex d = 0.0;
  const int max_iter = 200000 + 4 * static_cast<int>(std::abs(z));
  for (int i = 1; i < max_iter; ++i) {
    const Complex bi = b(N + i);
    d = bi - d;
    if (d == 0.0) d = tiny;
    c = bi - 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const Complex delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return 1.0 / f;
  }
  throw ConvergenceError("spherical Bessel continued fraction did not converge (" + describe(N, z) + ")",
                         N, 1.0);
}

void fill_derivatives(RadialTable& t, const std::vector<Complex>& b, Complex z, Complex riccati0) {
  const int top = t.valid_order;
  t.values.resize(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    RadialEval& e = t.values[static_cast<std::size_t>(n)];
    e.value = b[static_cast<std::size_t>(n)];
    if (n == 0) {
      e.derivative = -b[1];
      e.riccati_derivative = riccati0;
    } else {
      const Complex prev = b[static_cast<std::size_t>(n - 1)];
      e.derivative = prev - static_cast<double>(n + 1) / z * e.value;
      e.riccati_derivative = z * prev - static_cast<double>(n) * e.value;
    }
  }
}

RadialTable bessel_j_table(int n_max, Complex z) {
  RadialTable t;
  t.kind = RadialKind::BesselJ;
  t.z = z;
  t.valid_order = n_max;
  if (z == 0.0) {
    t.values.assign(static_cast<std::size_t>(n_max + 1), RadialEval{0.0, 0.0, 0.0});
    t.values[0] = {1.0, 0.0, 1.0};
    if (n_max >= 1) t.values[1].derivative = 1.0 / 3.0;
    return t;
  }
  // Miller-style downward recurrence seeded by the continued-fraction ratio at
  // the top, normalized against the closed form of j_0 or j_1.
  const int top = std::max(n_max, 1);
  std::vector<Complex> u(static_cast<std::size_t>(top + 2));
  u[static_cast<std::size_t>(top)] = 1.0;
  u[static_cast<std::size_t>(top + 1)] = bessel_ratio(top + 1, z);
  for (int k = top; k >= 1; --k) {
    u[static_cast<std::size_t>(k - 1)] =
        static_cast<double>(2 * k + 1) / z * u[static_cast<std::size_t>(k)] - u[static_cast<std::size_t>(k + 1)];
    if (std::abs(u[static_cast<std::size_t>(k - 1)]) > kRescaleAbove) {
      for (int j = k - 1; j <= top + 1; ++j) u[static_cast<std::size_t>(j)] /= kRescaleAbove;
    }
  }
  const Complex s = std::sin(z), c = std::cos(z);
  const Complex j0 = s / z;
  const Complex j1 = s / (z * z) - c / z;
  const Complex scale = std::abs(j0) >= std::abs(j1) ? j0 / u[0] : j1 / u[1];
  if (!finite(scale)) throw OverflowError("spherical Bessel j normalization overflow (" + describe(top, z) + ")");
  for (auto& v : u) v *= scale;
  // The closed forms are exact; keep them bit-for-bit.
  u[0] = j0;
  u[1] = j1;
  fill_derivatives(t, u, z, c);
  t.values.resize(static_cast<std::size_t>(n_max + 1));
  return t;
}

RadialTable hankel_recurrence(RadialKind kind, int n_max, Complex z) {
  RadialTable t;
  t.kind = kind;
  t.z = z;
  if (z == 0.0) throw DomainError("spherical Hankel function undefined at z = 0");
  const int top = std::max(n_max, 1);
  std::vector<Complex> h(static_cast<std::size_t>(top + 1));
  // h1: -i e^{iz}/z, h2: +i e^{-iz}/z.
  const double sgn = kind == RadialKind::Hankel1 ? 1.0 : -1.0;
  const Complex e = std::exp(sgn * kI * z);
  h[0] = -sgn * kI * e / z;
  h[1] = -e / z - sgn * kI * e / (z * z);
  int valid = finite(h[0]) ? (finite(h[1]) ? 1 : 0) : -1;
  if (valid < 1) throw OverflowError("spherical Hankel closed form overflow (" + describe(0, z) + ")");
  for (int n = 1; n < top; ++n) {
    const Complex next = static_cast<double>(2 * n + 1) / z * h[static_cast<std::size_t>(n)] -
                         h[static_cast<std::size_t>(n - 1)];
    if (!finite(next) || std::abs(next) > kOverflowAbove) break;
    h[static_cast<std::size_t>(n + 1)] = next;
    valid = n + 1;
  }
  // The derivative of order n uses order n - 1 only, but order 0 needs order 1.
  t.valid_order = std::min(valid, n_max);
  // d/dz [z h_0(z)] = e^{+-iz} for both kinds.
  fill_derivatives(t, h, z, e);
  for (const auto& v : t.values) {
    if (!finite(v.derivative) || !finite(v.riccati_derivative)) {
      t.valid_order = static_cast<int>(&v - t.values.data()) - 1;
      t.values.resize(static_cast<std::size_t>(std::max(t.valid_order + 1, 0)));
      break;
    }
  }
  return t;
}

// Upward recurrence is accurate for the Hankel kind that is recessive in the
// half plane of z (h1 for Im z >= 0, h2 for Im z < 0). The dominant kind loses
// accuracy as n grows, so it is taken as 2 j - h_recessive; there |h_dominant| >= |j|
// and the subtraction does not cancel.
RadialTable hankel_table(RadialKind kind, int n_max, Complex z) {
  if (z == 0.0) throw DomainError("spherical Hankel function undefined at z = 0");
  const RadialKind recessive = z.imag() >= 0.0 ? RadialKind::Hankel1 : RadialKind::Hankel2;
  if (kind == recessive) return hankel_recurrence(kind, n_max, z);
  RadialTable t = hankel_recurrence(recessive, n_max, z);
  const RadialTable j = bessel_j_table(n_max, z);
  t.kind = kind;
  for (int n = 0; n <= t.valid_order; ++n) {
    RadialEval& e = t.values[static_cast<std::size_t>(n)];
    const RadialEval& b = j[n];
    e = {2.0 * b.value - e.value, 2.0 * b.derivative - e.derivative,
         2.0 * b.riccati_derivative - e.riccati_derivative};
  }
  return t;
}

}  // namespace

RadialTable radial_table(RadialKind kind, int n_max, Complex z) {
  if (n_max < 0) throw IndexError("radial table: n_max must be >= 0");
  if (!finite(z)) throw DomainError("radial table: non-finite argument");
  if (kind == RadialKind::BesselJ) return bessel_j_table(n_max, z);
  return hankel_table(kind, n_max, z);
}

std::vector<RadialEval> spherical_bessel_sequence(RadialKind kind, int n_max, Complex z) {
  RadialTable t = radial_table(kind, n_max, z);
  if (t.valid_order < n_max)
    throw OverflowError("spherical Hankel recurrence overflow (" + describe(t.valid_order + 1, z) + ")");
  return std::move(t.values);
}

RadialEval spherical_bessel(RadialKind kind, int n, Complex z, int max_order) {
  if (n < 0) throw IndexError("spherical Bessel order must be >= 0");
  if (n > max_order) throw IndexError("spherical Bessel order exceeds configured maximum (" + describe(n, z) + ")");
  return spherical_bessel_sequence(kind, n, z)[static_cast<std::size_t>(n)];
}

Complex wronskian_check(int n, Complex z) {
  if (z == 0.0) throw DomainError("Wronskian undefined at z = 0");
  const RadialEval j = spherical_bessel(RadialKind::BesselJ, n, z);
  const RadialEval h = spherical_bessel(RadialKind::Hankel1, n, z);
  return j.value * h.derivative - j.derivative * h.value;
}

LegendreTable::LegendreTable(int n_max, double theta) : n_max_(n_max), theta_(theta) {
  if (n_max < 0) throw IndexError("Legendre table: n_max must be >= 0");
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("Legendre table: theta must lie in [0, pi]");
  // Keep x and s exact at the poles and the equator.
  double x = std::cos(theta), s = std::sin(theta);
  if (theta == 0.0) { x = 1.0; s = 0.0; }
  if (theta == kPi) { x = -1.0; s = 0.0; }
  p_.assign(index(n_max + 1, 0), 0.0);
  double pmm = 1.0;
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) pmm *= s * std::sqrt((2.0 * m - 1.0) / (2.0 * m));
    p_[index(m, m)] = pmm;
    if (m + 1 <= n_max) p_[index(m + 1, m)] = std::sqrt(2.0 * m + 1.0) * x * pmm;
    for (int n = m + 2; n <= n_max; ++n) {
      const double a = (2.0 * n - 1.0) * x * p_[index(n - 1, m)];
      const double b = std::sqrt(static_cast<double>((n - 1) * (n - 1) - m * m)) * p_[index(n - 2, m)];
      p_[index(n, m)] = (a - b) / std::sqrt(static_cast<double>(n * n - m * m));
    }
  }
}

double LegendreTable::pbar(int n, int m) const {
  if (n < 0 || m < 0 || m > n) return 0.0;
  return p_[index(n, m)];
}

LegendreEval LegendreTable::normalized(int n, int m) const {
  if (n < 0 || n > n_max_) throw IndexError("Legendre table: order out of range");
  if (m < 0 || m > n) throw IndexError("Legendre table: require 0 <= m <= n");
  LegendreEval e{};
  e.value = pbar(n, m);
  if (m == 0) {
    e.theta_derivative = -std::sqrt(static_cast<double>(n) * (n + 1)) * pbar(n, 1);
    e.over_sin_theta = 0.0;
  } else {
    e.theta_derivative = 0.5 * (std::sqrt(static_cast<double>(n + m) * (n - m + 1)) * pbar(n, m - 1) -
                                std::sqrt(static_cast<double>(n + m + 1) * (n - m)) * pbar(n, m + 1));
    e.over_sin_theta = 0.5 * (std::sqrt(static_cast<double>(n - m) * (n - m - 1)) * pbar(n - 1, m + 1) +
                              std::sqrt(static_cast<double>(n + m) * (n + m - 1)) * pbar(n - 1, m - 1));
  }
  return e;
}

LegendreEval LegendreTable::unnormalized(int n, int m) const {
  LegendreEval e = normalized(n, m);
  const double f = legendre_scale(n, m);
  return {e.value * f, e.theta_derivative * f, e.over_sin_theta * f};
}

double legendre_scale(int n, int m) {
  double f = 1.0;
  for (int k = n - m + 1; k <= n + m; ++k) f *= std::sqrt(static_cast<double>(k));
  return f;
}

LegendreEval assoc_legendre(int n, int m, double theta) {
  if (n < 0) throw IndexError("associated Legendre: n must be >= 0");
  if (m < 0 || m > n) throw IndexError("associated Legendre: require 0 <= m <= n");
  return LegendreTable(n, theta).unnormalized(n, m);
}

}  // namespace bodysphere
