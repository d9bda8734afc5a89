#pragma once

// Self-verification suite. Every check compares the library against an
// independent oracle and reports its measured residual next to the tolerance.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bodysphere/scenario.hpp"
#include "bodysphere/vswf.hpp"

namespace bodysphere::app {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

enum class VerifyLevel { Quick, Full };

using WaveFunction = std::function<Vector3c(const ModeIndex&, RadialKind, Complex, const SphericalPoint&)>;

struct WaveFunctionSet {
  WaveFunction m;
  WaveFunction n;
};

WaveFunctionSet library_wave_functions();

/// j_n, h_n^(1), h_n^(2) and j_n' against the 50-digit oracles, n <= 30, 0.1 <= |z| <= 50.
CheckResult check_bessel_fidelity(int samples, std::uint64_t seed = 1);
/// |z^2 W[j_n, h_n] - i| over the same sample distribution.
CheckResult check_wronskian(int samples, std::uint64_t seed = 2);
/// M = curl N / k, N = curl M / k, div M = div N = 0 by finite differences.
CheckResult check_vswf_duality(int points, std::uint64_t seed = 3,
                               const WaveFunctionSet& wf = library_wave_functions());
/// Matched-media total dyadic against the closed-form free-space dyadic, 0.5 <= kR <= 30.
CheckResult check_free_space(int pairs, std::uint64_t seed = 4);
/// Matched media: max |G_s| / max |G_d| for same-region pairs.
CheckResult check_matched_null(int pairs, std::uint64_t seed = 5);
/// mu(x0) G(x, x0) against mu(x) G(x0, x)^T, `pairs_per_case` in each placement case.
CheckResult check_reciprocity(const SphereScenario& scenario, int pairs_per_case, std::uint64_t seed = 6);
/// Tangential E and H continuity at r = d for sources on both sides (all four
/// placement cases). Returns the E check then the H check.
std::vector<CheckResult> check_interface(const SphereScenario& scenario, int samples, int order_q = 60);

VerifyReport verify(VerifyLevel level);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace bodysphere::app
