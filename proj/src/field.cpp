#include "bodysphere/field.hpp"

#include <algorithm>
#include <cmath>

namespace bodysphere {

double to_db(double magnitude) {
  if (!(magnitude > 0.0)) return kDbFloor;
  return std::max(20.0 * std::log10(magnitude), kDbFloor);
}

FieldSample make_sample(const SphericalPoint& x, const Vector3c& e) {
  FieldSample s;
  s.position = x;
  s.e = e;
  s.mag_total_db = to_db(e.norm());
  s.mag_phi_db = to_db(std::abs(e(2)));
  return s;
}

FieldSample efield(const SphereGreens& greens, GreensPart part, const DipoleSource& source, const SphericalPoint& x,
                   SeriesInfo* info) {
  const SphereScenario& s = greens.scenario();
  region_of(s, source);
  const double mu = s.mu_at(source.position.r());
  const Dyadic g = greens.evaluate(part, x, source.position, info);
  return make_sample(x, kI * s.omega() * mu * (g * source.moment));
}

FieldSample efield(const SphereScenario& scenario, const DipoleSource& source, const SphericalPoint& x,
                   const TruncationSpec& trunc) {
  return efield(SphereGreens(scenario, trunc), GreensPart::Total, source, x);
}

FieldSample scattered_efield(const SphereScenario& scenario, const DipoleSource& source, const SphericalPoint& x,
                             const TruncationSpec& trunc) {
  return efield(SphereGreens(scenario, trunc), GreensPart::Scattered, source, x);
}

}  // namespace bodysphere
