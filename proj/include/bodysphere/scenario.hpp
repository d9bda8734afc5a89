#pragma once

#include <string>

#include "bodysphere/geometry.hpp"

namespace bodysphere {

/// Homogeneous, isotropic material. Complex permittivity eps' + i sigma/omega
/// (e^{-i omega t} convention, so lossy media have Im k > 0).
struct Medium {
  std::string name;
  double permittivity = 0.0;  // F/m, real part
  double conductivity = 0.0;  // S/m
  double permeability = 0.0;  // H/m

  Complex complex_permittivity(double frequency) const;
  void validate() const;
};

Complex wavenumber(const Medium& medium, double frequency);

/// Sphere of radius d filled with `body`, embedded in `exterior`.
class SphereScenario {
 public:
  SphereScenario(double radius_d, Medium body, Medium exterior, double frequency);

  double radius() const { return radius_; }
  double frequency() const { return frequency_; }
  double omega() const { return 2.0 * kPi * frequency_; }
  const Medium& body() const { return body_; }
  const Medium& exterior() const { return exterior_; }
  Complex k_body() const { return k_body_; }
  Complex k_exterior() const { return k_exterior_; }

  bool inside(double r) const { return r < radius_; }
  Complex k_at(double r) const { return inside(r) ? k_body_ : k_exterior_; }
  double mu_at(double r) const { return inside(r) ? body_.permeability : exterior_.permeability; }

 private:
  double radius_;
  Medium body_;
  Medium exterior_;
  double frequency_;
  Complex k_body_;
  Complex k_exterior_;
};

enum class Region { Inside, Outside };

/// Transmitter/receiver placement; the first digit is the receiver region,
/// the second the transmitter region (1 = body, 2 = exterior).
enum class PlacementCase { Case11, Case21, Case12, Case22 };

const char* to_string(PlacementCase c);

PlacementCase classify(const SphereScenario& scenario, double source_r, double receiver_r);

/// Point current moment (A m), components in the spherical basis at `position`.
struct DipoleSource {
  SphericalPoint position;
  Vector3c moment = Vector3c::Zero();
};

Region region_of(const SphereScenario& scenario, const DipoleSource& source);

/// The lossless scenario of the arm/shoulder reference simulation:
/// d = 0.15 m, 1 GHz, body eps = 2.563e-10 F/m, air eps = 8.8542e-12 F/m, mu = 1.256e-6 H/m.
SphereScenario reference_scenario();
Medium reference_body();
Medium reference_air();

}  // namespace bodysphere
