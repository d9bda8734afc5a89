#pragma once

// JSON scenario files:
//
//   {"radius_m": 0.15, "frequency_hz": 1e9,
//    "body":     {"eps": 2.563e-10, "mu": 1.256e-6, "sigma": 0},
//    "exterior": {"eps": 8.8542e-12, "mu": 1.256e-6, "sigma": 0},
//    "source":   {"r": 0.16, "theta": 1.5707963267948966, "phi": 0,
//                 "moment": [[0, 0], [0, 0], [1, 0]]}}
//
// "sigma" defaults to 0 and "moment" (spherical components at the source,
// [re, im] pairs) to a unit phi-hat moment.

#include <filesystem>
#include <string>

#include "bodysphere/scenario.hpp"

namespace bodysphere::app {

struct ScenarioConfig {
  SphereScenario scenario;
  DipoleSource source;
};

/// Throws ValidationError naming the offending field (or the parse position).
ScenarioConfig parse_scenario(const std::string& json_text);

/// Throws IoError if the file cannot be read, ValidationError otherwise.
ScenarioConfig load_scenario(const std::filesystem::path& path);

std::string to_json(const ScenarioConfig& config);

/// Reference arm/shoulder scenario with the transmitter at (0.16 m, pi/2, 0).
ScenarioConfig reference_config();

}  // namespace bodysphere::app
