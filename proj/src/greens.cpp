#include "bodysphere/greens.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "bodysphere/errors.hpp"
#include "bodysphere/vswf.hpp"

namespace bodysphere {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// a*b*c without spurious 0*inf: falls back to log-magnitude arithmetic when the
// naive product leaves the double range.
Complex robust_product(Complex a, Complex b, Complex c) {
  if (a == 0.0 || b == 0.0 || c == 0.0) return 0.0;
  const Complex p = a * b * c;
  if (finite(p) && p != 0.0) return p;
  const double lg = std::log(std::abs(a)) + std::log(std::abs(b)) + std::log(std::abs(c));
  if (lg < -745.0) return 0.0;
  if (lg > 709.0) throw OverflowError("Green's function series term exceeds double range");
  return std::polar(std::exp(lg), std::arg(a) + std::arg(b) + std::arg(c));
}

struct RadialRow {
  Complex z, z_over_rho, ricc_over_rho;
};

// Radial functions of one kind at one point, orders 0..Q.
class RadialSide {
 public:
  RadialSide(RadialKind kind, Complex k, double r, int q) : rho_(k * r), table_(radial_table(kind, q, k * r)) {}

  void require(int n) const {
    if (n > table_.valid_order) {
      std::ostringstream os;
      os << "radial functions overflow at order " << n << " for argument (" << rho_.real() << "," << rho_.imag()
         << ")";
      throw OverflowError(os.str());
    }
  }

  RadialRow row(int n) const {
    const RadialEval& e = table_[n];
    return {e.value, e.value / rho_, e.riccati_derivative / rho_};
  }

 private:
  Complex rho_;
  RadialTable table_;
};

// Angular data of one point, orders 0..Q.
struct AngularSide {
  AngularSide(const SphericalPoint& x, int q) : legendre(q, x.theta()) {
    cos_m.resize(static_cast<std::size_t>(q + 1));
    sin_m.resize(static_cast<std::size_t>(q + 1));
    for (int m = 0; m <= q; ++m) {
      cos_m[static_cast<std::size_t>(m)] = std::cos(m * x.phi());
      sin_m[static_cast<std::size_t>(m)] = std::sin(m * x.phi());
    }
  }

  detail::AngularFactors factors(int n, int m) const {
    const LegendreEval le = legendre.normalized(n, m);
    return {le.value, le.theta_derivative, le.over_sin_theta, cos_m[static_cast<std::size_t>(m)],
            sin_m[static_cast<std::size_t>(m)]};
  }

  LegendreTable legendre;
  std::vector<double> cos_m, sin_m;
};

// Sum over m and parity of c_nm a(x) a(x0)^T for the M and N angular vectors,
// with normalized Legendre functions so c_nm = (2 - delta_m0)(2n+1)/(n(n+1)).
void angular_sums(int n, int l_max, const AngularSide& f, const AngularSide& s, Eigen::Matrix3d& am,
                  Eigen::Matrix3d& an) {
  am.setZero();
  an.setZero();
  const double base = (2.0 * n + 1.0) / (static_cast<double>(n) * (n + 1));
  const int m_top = std::min(n, l_max);
  for (int m = 0; m <= m_top; ++m) {
    const double c = (m == 0 ? 1.0 : 2.0) * base;
    const auto af = f.factors(n, m);
    const auto as = s.factors(n, m);
    for (Parity par : {Parity::Even, Parity::Odd}) {
      if (m == 0 && par == Parity::Odd) continue;
      am.noalias() += c * detail::m_angular(par, af) * detail::m_angular(par, as).transpose();
      an.noalias() += c * detail::n_angular(par, n, af) * detail::n_angular(par, n, as).transpose();
    }
  }
}

// One radial product family of the series: field-side and source-side radial
// functions with per-order channel weights [TM, TE].
struct SeriesTerm {
  const RadialSide* field;
  const RadialSide* source;
  const CoefficientTable* table;  // null for the direct term (unit weights)
  const BoundaryMatrix CoeffSet::*weights;
};

void check_points(const SphericalPoint& x, const SphericalPoint& x0) {
  if (!(x.r() > 0.0) || !(x0.r() > 0.0)) throw DomainError("Green's function: points must have r > 0");
  const double scale = std::max(x.r(), x0.r());
  if (distance(x, x0) <= 1e-12 * scale) throw CoincidentPointError("Green's function: field and source points coincide");
}

void check_interface(const SphereScenario& s, const SphericalPoint& p) {
  if (std::abs(p.r() - s.radius()) < 1e-6 * s.radius())
    throw InterfaceError("Green's function: point within 1e-6 d of the sphere surface");
}

class SeriesEvaluator {
 public:
  SeriesEvaluator(const TruncationSpec& trunc, const SphericalPoint& x, const SphericalPoint& x0)
      : trunc_(trunc), fa_(x, trunc.max_order_q), sa_(x0, trunc.max_order_q) {}

  Dyadic run(Complex k_source, const std::vector<SeriesTerm>& terms, double size_parameter, SeriesInfo* info) const {
    const int q = trunc_.max_order_q;
    const int start = std::min(starting_order(size_parameter), q);
    const Complex pref = kI * k_source / (4.0 * kPi);
    Dyadic sum = Dyadic::Zero();
    Eigen::Matrix3d am, an;
    int stable = 0;
    bool converged = false;
    double rel = 0.0;
    int n = 1;
    for (; n <= q; ++n) {
      angular_sums(n, trunc_.max_azimuthal_l, fa_, sa_, am, an);
      Dyadic term = Dyadic::Zero();
      for (const SeriesTerm& t : terms) {
        t.field->require(n);
        t.source->require(n);
        Complex w_tm = 1.0, w_te = 1.0;
        if (t.table) {
          const BoundaryMatrix& b = t.table->at(n).*(t.weights);
          w_tm = b(0, 0);
          w_te = b(1, 1);
        }
        const RadialRow rf = t.field->row(n);
        const RadialRow rs = t.source->row(n);
        term += robust_product(w_te, rf.z, rs.z) * am.cast<Complex>();
        const Complex rfv[3] = {rf.z_over_rho, rf.ricc_over_rho, rf.ricc_over_rho};
        const Complex rsv[3] = {rs.z_over_rho, rs.ricc_over_rho, rs.ricc_over_rho};
        const Complex p00 = robust_product(w_tm, rfv[0], rsv[0]);
        const Complex p01 = robust_product(w_tm, rfv[0], rsv[1]);
        const Complex p10 = robust_product(w_tm, rfv[1], rsv[0]);
        const Complex p11 = robust_product(w_tm, rfv[1], rsv[1]);
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const Complex w = i == 0 ? (j == 0 ? p00 : p01) : (j == 0 ? p10 : p11);
            term(i, j) += w * an(i, j);
          }
        }
      }
      term *= pref;
      sum += term;
      const double total = sum.norm();
      const double change = term.norm();
      rel = total > 0.0 ? change / total : (change > 0.0 ? 1.0 : 0.0);
      if (trunc_.mode == SeriesMode::UntilConverged && n >= start) {
        stable = rel <= trunc_.rel_tol ? stable + 1 : 0;
        if (stable >= 3) {
          converged = true;
          break;
        }
      }
    }
    if (trunc_.mode == SeriesMode::UntilConverged && !converged) {
      std::ostringstream os;
      os << "Green's function series did not converge by order " << q << " (last relative change " << rel << ")";
      throw ConvergenceError(os.str(), q, rel);
    }
    if (info) {
      info->start_order = start;
      info->orders_used = std::min(n, q);
      info->last_relative_change = rel;
    }
    return sum;
  }

 private:
  const TruncationSpec& trunc_;
  AngularSide fa_, sa_;
};

struct CaseSetup {
  PlacementCase placement;
  Complex k_field, k_source;
  RadialKind field_kind, source_kind;
  const BoundaryMatrix CoeffSet::*weights;
};

CaseSetup case_setup(const SphereScenario& s, PlacementCase c) {
  const Complex k1 = s.k_body(), k2 = s.k_exterior();
  switch (c) {
    case PlacementCase::Case11: return {c, k1, k1, RadialKind::BesselJ, RadialKind::BesselJ, &CoeffSet::r12};
    case PlacementCase::Case21: return {c, k2, k1, RadialKind::Hankel1, RadialKind::BesselJ, &CoeffSet::t12};
    case PlacementCase::Case12: return {c, k1, k2, RadialKind::BesselJ, RadialKind::Hankel1, &CoeffSet::t21};
    case PlacementCase::Case22: return {c, k2, k2, RadialKind::Hankel1, RadialKind::Hankel1, &CoeffSet::r21};
  }
  throw ValidationError("unknown placement case");
}

Dyadic evaluate_impl(const SphereScenario& s, const CoefficientTable& table, GreensPart part,
                     std::optional<PlacementCase> expected, const SphericalPoint& x, const SphericalPoint& x0,
                     const TruncationSpec& trunc, SeriesInfo* info) {
  trunc.validate();
  check_points(x, x0);
  check_interface(s, x);
  check_interface(s, x0);
  const PlacementCase placement = classify(s, x0.r(), x.r());
  if (expected && *expected != placement)
    throw ValidationError(std::string("placement case ") + to_string(*expected) +
                          " inconsistent with point radii (" + to_string(placement) + ")");
  const CaseSetup cs = case_setup(s, placement);
  const bool same_region = placement == PlacementCase::Case11 || placement == PlacementCase::Case22;
  if (part == GreensPart::Direct && !same_region)
    throw ValidationError("direct term is only defined when source and receiver share a region");

  const int q = trunc.max_order_q;
  const SeriesEvaluator series(trunc, x, x0);
  // The direct and scattered parts converge at different rates, so each is summed on its own:
  // the direct series may need orders past the last representable interface coefficient.
  Dyadic sum = Dyadic::Zero();
  SeriesInfo direct_info, scattered_info;
  if (part != GreensPart::Scattered && same_region) {
    const bool outgoing_at_field = x.r() >= x0.r();
    const RadialSide field(outgoing_at_field ? RadialKind::Hankel1 : RadialKind::BesselJ, cs.k_field, x.r(), q);
    const RadialSide source(outgoing_at_field ? RadialKind::BesselJ : RadialKind::Hankel1, cs.k_source, x0.r(), q);
    const std::vector<SeriesTerm> terms{{&field, &source, nullptr, nullptr}};
    sum += series.run(cs.k_source, terms, std::abs(cs.k_field) * std::max(x.r(), x0.r()), &direct_info);
  }
  if (part != GreensPart::Direct) {
    const RadialSide field(cs.field_kind, cs.k_field, x.r(), q);
    const RadialSide source(cs.source_kind, cs.k_source, x0.r(), q);
    const std::vector<SeriesTerm> terms{{&field, &source, &table, cs.weights}};
    const double size = std::max(std::abs(s.k_body()), std::abs(s.k_exterior())) * s.radius();
    sum += series.run(cs.k_source, terms, size, &scattered_info);
  }
  if (info) {
    const bool use_direct = direct_info.orders_used >= scattered_info.orders_used;
    *info = use_direct ? direct_info : scattered_info;
  }
  return sum;
}

}  // namespace

void TruncationSpec::validate() const {
  if (max_order_q < 1) throw ValidationError("truncation: max_order_q must be >= 1");
  if (max_azimuthal_l < 0 || max_azimuthal_l > max_order_q)
    throw ValidationError("truncation: require 0 <= max_azimuthal_l <= max_order_q");
  if (!(rel_tol > 0.0)) throw ValidationError("truncation: rel_tol must be > 0");
}

int starting_order(double x) {
  return static_cast<int>(std::ceil(x + 4.0 * std::cbrt(x) + 2.0));
}

Dyadic direct_dgf(Complex k, const SphericalPoint& x, const SphericalPoint& x0, const TruncationSpec& trunc,
                  SeriesInfo* info) {
  trunc.validate();
  check_points(x, x0);
  const int q = trunc.max_order_q;
  const bool outgoing_at_field = x.r() >= x0.r();
  const RadialSide field(outgoing_at_field ? RadialKind::Hankel1 : RadialKind::BesselJ, k, x.r(), q);
  const RadialSide source(outgoing_at_field ? RadialKind::BesselJ : RadialKind::Hankel1, k, x0.r(), q);
  const std::vector<SeriesTerm> terms{{&field, &source, nullptr, nullptr}};
  return SeriesEvaluator(trunc, x, x0).run(k, terms, std::abs(k) * std::max(x.r(), x0.r()), info);
}

Dyadic scattered_dgf(const SphereScenario& scenario, PlacementCase placement, const SphericalPoint& x,
                     const SphericalPoint& x0, const TruncationSpec& trunc, SeriesInfo* info) {
  trunc.validate();
  const CoefficientTable table(scenario, trunc.max_order_q);
  return evaluate_impl(scenario, table, GreensPart::Scattered, placement, x, x0, trunc, info);
}

Dyadic scattered_dgf(const SphereScenario& scenario, const CoefficientTable& table, PlacementCase placement,
                     const SphericalPoint& x, const SphericalPoint& x0, const TruncationSpec& trunc,
                     SeriesInfo* info) {
  return evaluate_impl(scenario, table, GreensPart::Scattered, placement, x, x0, trunc, info);
}

Dyadic total_dgf(const SphereScenario& scenario, const SphericalPoint& x, const SphericalPoint& x0,
                 const TruncationSpec& trunc, SeriesInfo* info) {
  trunc.validate();
  const CoefficientTable table(scenario, trunc.max_order_q);
  return evaluate_impl(scenario, table, GreensPart::Total, std::nullopt, x, x0, trunc, info);
}

Dyadic total_dgf(const SphereScenario& scenario, const CoefficientTable& table, const SphericalPoint& x,
                 const SphericalPoint& x0, const TruncationSpec& trunc, SeriesInfo* info) {
  return evaluate_impl(scenario, table, GreensPart::Total, std::nullopt, x, x0, trunc, info);
}

SphereGreens::SphereGreens(SphereScenario scenario, TruncationSpec trunc)
    : scenario_(std::move(scenario)), trunc_(trunc), table_(scenario_, (trunc.validate(), trunc.max_order_q)) {}

SphereGreens::SphereGreens(SphereScenario scenario, CoefficientTable table, TruncationSpec trunc)
    : scenario_(std::move(scenario)), trunc_(trunc), table_(std::move(table)) {
  trunc_.validate();
}

Dyadic SphereGreens::evaluate(GreensPart part, const SphericalPoint& x, const SphericalPoint& x0,
                              SeriesInfo* info) const {
  return evaluate_impl(scenario_, table_, part, std::nullopt, x, x0, trunc_, info);
}

}  // namespace bodysphere
