#include "bodysphere/scenario.hpp"

#include <cmath>

#include "bodysphere/errors.hpp"

namespace bodysphere {

Complex Medium::complex_permittivity(double frequency) const {
  return {permittivity, conductivity / (2.0 * kPi * frequency)};
}

void Medium::validate() const {
  if (!(permittivity > 0.0) || !std::isfinite(permittivity))
    throw ValidationError("medium '" + name + "': permittivity must be > 0");
  if (!(conductivity >= 0.0) || !std::isfinite(conductivity))
    throw ValidationError("medium '" + name + "': conductivity must be >= 0");
  if (!(permeability > 0.0) || !std::isfinite(permeability))
    throw ValidationError("medium '" + name + "': permeability must be > 0");
}

Complex wavenumber(const Medium& medium, double frequency) {
  if (!(frequency > 0.0)) throw ValidationError("wavenumber: frequency must be > 0");
  const double omega = 2.0 * kPi * frequency;
  Complex k = omega * std::sqrt(medium.permeability * medium.complex_permittivity(frequency));
  // Principal sqrt already gives Re k >= 0; with Im eps >= 0 this also gives Im k >= 0.
  if (k.real() < 0.0) k = -k;
  return k;
}

SphereScenario::SphereScenario(double radius_d, Medium body, Medium exterior, double frequency)
    : radius_(radius_d), body_(std::move(body)), exterior_(std::move(exterior)), frequency_(frequency) {
  if (!(radius_d > 0.0) || !std::isfinite(radius_d)) throw ValidationError("scenario: radius must be > 0");
  if (!(frequency > 0.0) || !std::isfinite(frequency)) throw ValidationError("scenario: frequency must be > 0");
  body_.validate();
  exterior_.validate();
  k_body_ = wavenumber(body_, frequency_);
  k_exterior_ = wavenumber(exterior_, frequency_);
}

const char* to_string(PlacementCase c) {
  switch (c) {
    case PlacementCase::Case11: return "Case11";
    case PlacementCase::Case21: return "Case21";
    case PlacementCase::Case12: return "Case12";
    case PlacementCase::Case22: return "Case22";
  }
  return "?";
}

PlacementCase classify(const SphereScenario& scenario, double source_r, double receiver_r) {
  const double d = scenario.radius();
  if (std::abs(source_r - d) <= 1e-12 * d) throw InterfaceError("classify: source lies on the sphere surface");
  if (std::abs(receiver_r - d) <= 1e-12 * d) throw InterfaceError("classify: receiver lies on the sphere surface");
  const bool src_in = source_r < d;
  const bool rx_in = receiver_r < d;
  if (src_in && rx_in) return PlacementCase::Case11;
  if (src_in) return PlacementCase::Case21;
  if (rx_in) return PlacementCase::Case12;
  return PlacementCase::Case22;
}

Region region_of(const SphereScenario& scenario, const DipoleSource& source) {
  const double d = scenario.radius();
  if (std::abs(source.position.r() - d) <= 1e-12 * d) throw InterfaceError("dipole source lies on the sphere surface");
  return scenario.inside(source.position.r()) ? Region::Inside : Region::Outside;
}

Medium reference_body() { return {"body", 2.563e-10, 0.0, 1.256e-6}; }
Medium reference_air() { return {"air", 8.8542e-12, 0.0, 1.256e-6}; }

SphereScenario reference_scenario() { return {0.15, reference_body(), reference_air(), 1e9}; }

}  // namespace bodysphere
