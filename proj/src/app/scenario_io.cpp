#include "bodysphere/app/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bodysphere/errors.hpp"

namespace bodysphere::app {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("scenario field '" + field + "': " + what);
}

const json& member(const json& obj, const std::string& parent, const char* key) {
  const std::string path = parent.empty() ? key : parent + "." + key;
  if (!obj.contains(key)) fail(path, "missing");
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "not finite");
  return x;
}

double number_at(const json& obj, const std::string& parent, const char* key) {
  return number(member(obj, parent, key), parent.empty() ? key : parent + "." + key);
}

const json& object_at(const json& obj, const std::string& parent, const char* key) {
  const json& v = member(obj, parent, key);
  if (!v.is_object()) fail(parent.empty() ? key : parent + "." + key, "expected an object");
  return v;
}

Medium parse_medium(const json& root, const char* key) {
  const json& m = object_at(root, "", key);
  Medium med;
  med.name = key;
  med.permittivity = number_at(m, key, "eps");
  med.permeability = number_at(m, key, "mu");
  med.conductivity = m.contains("sigma") ? number_at(m, key, "sigma") : 0.0;
  const std::string p(key);
  if (med.permittivity <= 0.0) fail(p + ".eps", "must be > 0");
  if (med.permeability <= 0.0) fail(p + ".mu", "must be > 0");
  if (med.conductivity < 0.0) fail(p + ".sigma", "must be >= 0");
  return med;
}

Vector3c parse_moment(const json& src) {
  if (!src.contains("moment")) return {0.0, 0.0, 1.0};
  const json& m = src.at("moment");
  if (!m.is_array() || m.size() != 3) fail("source.moment", "expected 3 [re, im] pairs");
  Vector3c out;
  for (int i = 0; i < 3; ++i) {
    const std::string path = "source.moment[" + std::to_string(i) + "]";
    const json& c = m[static_cast<std::size_t>(i)];
    if (!c.is_array() || c.size() != 2) fail(path, "expected [re, im]");
    out(i) = {number(c[0], path + "[0]"), number(c[1], path + "[1]")};
  }
  return out;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("scenario JSON: top level must be an object");

  const double radius = number_at(root, "", "radius_m");
  if (radius <= 0.0) fail("radius_m", "must be > 0");
  const double freq = number_at(root, "", "frequency_hz");
  if (freq <= 0.0) fail("frequency_hz", "must be > 0");
  Medium body = parse_medium(root, "body");
  Medium ext = parse_medium(root, "exterior");

  const json& src = object_at(root, "", "source");
  const double r = number_at(src, "source", "r");
  const double theta = number_at(src, "source", "theta");
  const double phi = number_at(src, "source", "phi");
  if (r <= 0.0) fail("source.r", "must be > 0");
  if (theta < 0.0 || theta > kPi) fail("source.theta", "must lie in [0, pi]");
  if (std::abs(r - radius) <= 1e-6 * radius) fail("source.r", "lies on the sphere surface");

  try {
    ScenarioConfig cfg{SphereScenario(radius, std::move(body), std::move(ext), freq),
                       DipoleSource{SphericalPoint(r, theta, phi), parse_moment(src)}};
    return cfg;
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(std::string("scenario: ") + e.what());
  }
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  try {
    return parse_scenario(ss.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string to_json(const ScenarioConfig& c) {
  auto medium = [](const Medium& m) {
    return json{{"eps", m.permittivity}, {"mu", m.permeability}, {"sigma", m.conductivity}};
  };
  json moment = json::array();
  for (int i = 0; i < 3; ++i) moment.push_back({c.source.moment(i).real(), c.source.moment(i).imag()});
  const SphericalPoint& p = c.source.position;
  json root{{"radius_m", c.scenario.radius()},
            {"frequency_hz", c.scenario.frequency()},
            {"body", medium(c.scenario.body())},
            {"exterior", medium(c.scenario.exterior())},
            {"source", {{"r", p.r()}, {"theta", p.theta()}, {"phi", p.phi()}, {"moment", moment}}}};
  return root.dump(2) + "\n";
}

ScenarioConfig reference_config() {
  return {reference_scenario(), DipoleSource{SphericalPoint(0.16, kPi / 2.0, 0.0), Vector3c(0.0, 0.0, 1.0)}};
}

}  // namespace bodysphere::app
