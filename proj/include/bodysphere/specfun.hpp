#pragma once

// Spherical Bessel/Hankel functions of complex argument and associated
// Legendre functions (no Condon-Shortley phase, P_1^1(cos t) = sin t).

#include <complex>
#include <vector>

#include "bodysphere/geometry.hpp"

namespace bodysphere {

enum class RadialKind { BesselJ, Hankel1, Hankel2 };

inline constexpr int kDefaultMaxOrder = 120;

struct RadialEval {
  Complex value;
  Complex derivative;          // d/dz b_n(z)
  Complex riccati_derivative;  // d/dz [z b_n(z)]
};

struct LegendreEval {
  double value;            // P_n^m(cos theta)
  double theta_derivative; // d/dtheta P_n^m(cos theta)
  double over_sin_theta;   // m P_n^m(cos theta) / sin theta, analytic limit at the poles
};

/// Radial functions b_0..b_n_max at one argument. `valid_order` is the largest
/// order that stayed inside the double range; entries above it are unset.
struct RadialTable {
  RadialKind kind = RadialKind::BesselJ;
  Complex z;
  int valid_order = -1;
  std::vector<RadialEval> values;

  const RadialEval& operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
};

RadialTable radial_table(RadialKind kind, int n_max, Complex z);

/// Like radial_table but throws OverflowError if any order up to n_max overflows.
std::vector<RadialEval> spherical_bessel_sequence(RadialKind kind, int n_max, Complex z);

RadialEval spherical_bessel(RadialKind kind, int n, Complex z, int max_order = kDefaultMaxOrder);

/// j_n(z) h_n'(z) - j_n'(z) h_n(z); equals i / z^2 for an accurate implementation.
Complex wronskian_check(int n, Complex z);

/// Legendre functions for all 0 <= m <= n <= n_max at one angle.
///
/// Stored fully normalized, Pbar_n^m = sqrt((n-m)!/(n+m)!) P_n^m, which keeps every
/// entry O(1) up to high order. The unnormalized accessors rescale on demand.
class LegendreTable {
 public:
  LegendreTable(int n_max, double theta);

  int n_max() const { return n_max_; }
  double theta() const { return theta_; }

  LegendreEval normalized(int n, int m) const;
  LegendreEval unnormalized(int n, int m) const;

 private:
  std::size_t index(int n, int m) const {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(m);
  }
  double pbar(int n, int m) const;

  int n_max_;
  double theta_;
  std::vector<double> p_;
};

/// sqrt((n+m)!/(n-m)!): converts normalized to unnormalized Legendre values.
double legendre_scale(int n, int m);

LegendreEval assoc_legendre(int n, int m, double theta);

}  // namespace bodysphere
