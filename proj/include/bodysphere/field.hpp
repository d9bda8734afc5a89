#pragma once

#include "bodysphere/greens.hpp"
#include "bodysphere/scenario.hpp"

namespace bodysphere {

inline constexpr double kDbFloor = -300.0;

struct FieldSample {
  SphericalPoint position;
  Vector3c e = Vector3c::Zero();  // V/m, spherical basis at `position`
  double mag_total_db = kDbFloor;
  double mag_phi_db = kDbFloor;
};

/// 20 log10(|v| / 1 V/m), floored at -300 dB (also for v = 0).
double to_db(double magnitude);

FieldSample make_sample(const SphericalPoint& x, const Vector3c& e);

/// E = i omega mu_source G(x, x0) p with the total Green's dyadic.
FieldSample efield(const SphereScenario& scenario, const DipoleSource& source, const SphericalPoint& x,
                   const TruncationSpec& trunc);

/// Same as efield but with the scattered dyadic only.
FieldSample scattered_efield(const SphereScenario& scenario, const DipoleSource& source, const SphericalPoint& x,
                             const TruncationSpec& trunc);

/// Field of `source` for any Green's dyadic part, reusing a prepared evaluator.
FieldSample efield(const SphereGreens& greens, GreensPart part, const DipoleSource& source, const SphericalPoint& x,
                   SeriesInfo* info = nullptr);

}  // namespace bodysphere
