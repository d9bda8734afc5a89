#pragma once

// Independent reference computations for tests and `verify`. Nothing in the
// core evaluation path calls into this header, and the implementations share
// no radial or Legendre code with the core.

#include <functional>

#include "bodysphere/geometry.hpp"
#include "bodysphere/scenario.hpp"
#include "bodysphere/specfun.hpp"

namespace bodysphere::oracle {

// --- arbitrary precision (50 digits) -------------------------------------

/// Ascending power series of j_n(z) evaluated with `terms` terms; throws
/// ConvergenceError if the geometric tail bound is not below 1e-14 relative.
Complex series_bessel(int n, Complex z, int terms);
/// Same, adding terms until the tail bound is met.
Complex series_bessel(int n, Complex z);

/// h_n^{(1,2)}(z) by upward recurrence from the closed forms of orders 0 and 1.
Complex hankel_reference(RadialKind kind, int n, Complex z);

/// P_n^m(x) from the Rodrigues formula, no Condon-Shortley phase.
double legendre_rodrigues(int n, int m, double x);
/// d/dtheta P_n^m(cos theta) from the same Rodrigues polynomial.
double legendre_rodrigues_dtheta(int n, int m, double theta);

// --- closed forms ----------------------------------------------------------

Complex free_space_scalar(Complex k, double distance);

/// (I + grad grad / k^2) e^{ikR} / (4 pi R) in the spherical bases at (x, x0),
/// analytic derivatives.
Dyadic free_space_dyadic_exact(Complex k, const SphericalPoint& x, const SphericalPoint& x0);

struct FDStencil {
  double step = 1e-5;  // relative to the local length scale
  int order = 4;       // 2 or 4
};

/// Same dyadic with grad grad taken by finite differences of the scalar Green's
/// function. The step is relative to min(R, 1/|k|).
Dyadic free_space_dyadic(Complex k, const SphericalPoint& x, const SphericalPoint& x0,
                         const FDStencil& stencil = {1e-3, 4});

/// Textbook field of an electric current moment `moment` (A m, spherical basis at
/// x0) in a homogeneous medium, written via the equivalent charge dipole
/// p = i moment / omega. Returns spherical components at x.
Vector3c hertzian_dipole_field(Complex k, double omega, Complex permittivity, const SphericalPoint& x,
                               const SphericalPoint& x0, const Vector3c& moment);

// --- finite differences on Cartesian fields -------------------------------

using ScalarField = std::function<Complex(const Eigen::Vector3d&)>;
using VectorField = std::function<Vector3c(const Eigen::Vector3d&)>;
using SphericalField = std::function<Vector3c(const SphericalPoint&)>;

/// Wraps a field given in the local spherical basis as a Cartesian field.
VectorField cartesian_view(SphericalField f);

Vector3c gradient(const ScalarField& f, const Eigen::Vector3d& p, double h, int order = 4);
Complex divergence(const VectorField& f, const Eigen::Vector3d& p, double h, int order = 4);
Vector3c curl(const VectorField& f, const Eigen::Vector3d& p, double h, int order = 4);
Complex laplacian(const ScalarField& f, const Eigen::Vector3d& p, double h, int order = 4);
/// Component-wise Laplacian of a Cartesian vector field.
Vector3c vector_laplacian(const VectorField& f, const Eigen::Vector3d& p, double h, int order = 4);
/// Hessian of a scalar field, mixed terms included.
Eigen::Matrix3cd hessian(const ScalarField& f, const Eigen::Vector3d& p, double h, int order = 4);
/// curl curl F = grad(div F) - lap F from second-derivative stencils.
Vector3c curl_curl(const VectorField& f, const Eigen::Vector3d& p, double h, int order = 4);

// --- interface checks ------------------------------------------------------

struct InterfaceResidual {
  double tangential_e = 0.0;
  double tangential_h = 0.0;
};

/// Mismatch of tangential E and tangential H (H from an FD curl divided by
/// i omega mu of each region) across r = d. Each side is sampled at
/// r = d (1 +- j * offset), j = 1..3, and extrapolated quadratically to r = d.
/// Residuals are relative to the largest field magnitude over all samples.
InterfaceResidual interface_residual(const SphereScenario& scenario, const SphericalField& inside,
                                     const SphericalField& outside, int sample_count, double offset = 1e-4);

/// Deterministic, pole-free sample directions (golden-angle spiral).
std::vector<std::pair<double, double>> sphere_samples(int count);

struct ModeAmplitudes {
  Complex r_tm, r_te, t_tm, t_te;
};

/// Dense 4x4 solve of tangential E/H continuity for order n, built directly from
/// M and N evaluated on the surface (m = 1, generic angle). `source_inside`
/// selects an outgoing body wave incident from inside versus a standing
/// exterior wave incident from outside.
ModeAmplitudes solve_interface_modes(const SphereScenario& scenario, int n, bool source_inside);

}  // namespace bodysphere::oracle
