#pragma once

// Reflection/transmission coefficients of a homogeneous sphere, one order n at a
// time. TE (M-type) and TM (N-type) channels decouple, so every matrix is
// diagonal in the basis order [N-channel (TM), M-channel (TE)].
//
// Naming follows source -> destination region: r12 is the reflection seen by a
// source inside the body, t12 the transmission from the body to the exterior,
// r21 and t21 the same for a source outside.

#include <iosfwd>
#include <vector>

#include "bodysphere/scenario.hpp"
#include "bodysphere/specfun.hpp"

namespace bodysphere {

using BoundaryMatrix = Eigen::Matrix2cd;

enum class Channel { TM = 0, TE = 1 };

struct CoeffSet {
  int n = 0;
  BoundaryMatrix r12 = BoundaryMatrix::Zero();
  BoundaryMatrix r21 = BoundaryMatrix::Zero();
  BoundaryMatrix t12 = BoundaryMatrix::Identity();
  BoundaryMatrix t21 = BoundaryMatrix::Identity();
};

/// Tangential traces at r = d of unit-amplitude N and M waves of one kind.
///
/// Row 0 is the tangential-E trace, row 1 the tangential-H trace (common factor
/// 1/i dropped); column 0 is the N (TM) channel, column 1 the M (TE) channel:
///
///   [ (rho z)'/rho        z                  ]
///   [ k z / (w mu)        (rho z)' / (w mu d) ]      rho = k d
BoundaryMatrix bessel_interface_matrix(RadialKind kind, const Medium& medium, int n, Complex k, double d,
                                       double frequency);

CoeffSet coefficients(const SphereScenario& scenario, int n);

/// Coefficients for n = 1..n_max, built once and read-only afterwards.
///
/// Orders whose radial functions leave the double range are not stored;
/// n_max() reports the highest available order and at() throws beyond it.
class CoefficientTable {
 public:
  CoefficientTable(const SphereScenario& scenario, int n_max);

  int n_max() const { return static_cast<int>(sets_.size()); }
  int requested_order() const { return requested_; }
  const CoeffSet& operator[](int n) const { return sets_[static_cast<std::size_t>(n - 1)]; }
  const CoeffSet& at(int n) const;
  CoeffSet& mutable_set(int n) { return sets_[static_cast<std::size_t>(n - 1)]; }

 private:
  std::vector<CoeffSet> sets_;
  int requested_ = 0;
};

/// CSV rows (n, channel, |R|, arg R, |T|, arg T); channel names carry the direction, e.g. TM12.
void write_coefficients_csv(const CoefficientTable& table, std::ostream& out);

}  // namespace bodysphere
