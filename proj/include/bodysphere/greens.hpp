#pragma once

// Electric dyadic Green's function of a dielectric sphere as a vector spherical
// wave-function series:
//
//   G = (i k_s / 4 pi) sum_{n>=1} sum_{m<=n} sum_{e,o} c_nm [A^M M(x) M(x0)^T + A^N N(x) N(x0)^T]
//   c_nm = (2 - delta_m0) (2n+1) (n-m)! / (n (n+1) (n+m)!)
//
// with k_s the wavenumber of the source region. The direct term uses A = 1 with
// the outgoing Hankel function at the larger radius and j_n at the smaller one;
// scattered terms take A from the reflection/transmission coefficients. The
// delta-function self term at x = x0 is not represented.

#include "bodysphere/geometry.hpp"
#include "bodysphere/scattering.hpp"
#include "bodysphere/scenario.hpp"

namespace bodysphere {

enum class SeriesMode {
  UntilConverged,  // stop once the Cauchy criterion holds, error if it never does by max_order_q
  Fixed,           // always sum exactly max_order_q orders
};

struct TruncationSpec {
  int max_order_q = kDefaultMaxOrder;
  int max_azimuthal_l = kDefaultMaxOrder;
  double rel_tol = 1e-8;
  SeriesMode mode = SeriesMode::UntilConverged;

  void validate() const;
};

struct SeriesInfo {
  int start_order = 0;
  int orders_used = 0;
  double last_relative_change = 0.0;
};

/// Starting order ceil(x + 4 x^{1/3} + 2) for size parameter x.
int starting_order(double size_parameter);

Dyadic direct_dgf(Complex k, const SphericalPoint& x, const SphericalPoint& x0, const TruncationSpec& trunc,
                  SeriesInfo* info = nullptr);

Dyadic scattered_dgf(const SphereScenario& scenario, PlacementCase placement, const SphericalPoint& x,
                     const SphericalPoint& x0, const TruncationSpec& trunc, SeriesInfo* info = nullptr);
Dyadic scattered_dgf(const SphereScenario& scenario, const CoefficientTable& table, PlacementCase placement,
                     const SphericalPoint& x, const SphericalPoint& x0, const TruncationSpec& trunc,
                     SeriesInfo* info = nullptr);

/// Direct plus scattered for same-region pairs, transmitted field alone across the interface.
Dyadic total_dgf(const SphereScenario& scenario, const SphericalPoint& x, const SphericalPoint& x0,
                 const TruncationSpec& trunc, SeriesInfo* info = nullptr);
Dyadic total_dgf(const SphereScenario& scenario, const CoefficientTable& table, const SphericalPoint& x,
                 const SphericalPoint& x0, const TruncationSpec& trunc, SeriesInfo* info = nullptr);

enum class GreensPart { Direct, Scattered, Total };

/// Shared evaluator for repeated queries against one scenario; the coefficient
/// table is built once in the constructor.
class SphereGreens {
 public:
  SphereGreens(SphereScenario scenario, TruncationSpec trunc);
  SphereGreens(SphereScenario scenario, CoefficientTable table, TruncationSpec trunc);

  const SphereScenario& scenario() const { return scenario_; }
  const TruncationSpec& truncation() const { return trunc_; }
  const CoefficientTable& coefficients() const { return table_; }

  Dyadic evaluate(GreensPart part, const SphericalPoint& x, const SphericalPoint& x0,
                  SeriesInfo* info = nullptr) const;

 private:
  SphereScenario scenario_;
  TruncationSpec trunc_;
  CoefficientTable table_;
};

}  // namespace bodysphere
