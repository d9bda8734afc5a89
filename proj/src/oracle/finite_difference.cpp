#include <array>
#include <type_traits>

#include "bodysphere/errors.hpp"
#include "bodysphere/oracle.hpp"

namespace bodysphere::oracle {
namespace {

void check_order(int order) {
  if (order != 2 && order != 4) throw ValidationError("finite differences: order must be 2 or 4");
}

Eigen::Vector3d unit(int i) { return Eigen::Vector3d::Unit(i); }

// First-derivative weights at offsets -2..2 (units of h).
constexpr std::array<double, 5> kD1o2{0.0, -0.5, 0.0, 0.5, 0.0};
constexpr std::array<double, 5> kD1o4{1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
constexpr std::array<double, 5> kD2o2{0.0, 1.0, -2.0, 1.0, 0.0};
constexpr std::array<double, 5> kD2o4{-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

// Results are materialized as R: returning an Eigen expression would reference the local sum.
template <class F, class R = std::decay_t<std::invoke_result_t<F, const Eigen::Vector3d&>>>
R first(const F& f, const Eigen::Vector3d& p, int axis, double h, int order) {
  const auto& w = order == 2 ? kD1o2 : kD1o4;
  R acc = f(p) * 0.0;
  for (int s = -2; s <= 2; ++s) {
    const double c = w[static_cast<std::size_t>(s + 2)];
    if (c != 0.0) acc += c * f(p + s * h * unit(axis));
  }
  return R(acc / h);
}

template <class F, class R = std::decay_t<std::invoke_result_t<F, const Eigen::Vector3d&>>>
R second(const F& f, const Eigen::Vector3d& p, int axis, double h, int order) {
  const auto& w = order == 2 ? kD2o2 : kD2o4;
  R acc = f(p) * 0.0;
  for (int s = -2; s <= 2; ++s) {
    const double c = w[static_cast<std::size_t>(s + 2)];
    if (c != 0.0) acc += c * f(p + s * h * unit(axis));
  }
  return R(acc / (h * h));
}

template <class F, class R = std::decay_t<std::invoke_result_t<F, const Eigen::Vector3d&>>>
R mixed(const F& f, const Eigen::Vector3d& p, int a, int b, double h, int order) {
  const auto& w = order == 2 ? kD1o2 : kD1o4;
  R acc = f(p) * 0.0;
  for (int s = -2; s <= 2; ++s) {
    const double cs = w[static_cast<std::size_t>(s + 2)];
    if (cs == 0.0) continue;
    for (int t = -2; t <= 2; ++t) {
      const double ct = w[static_cast<std::size_t>(t + 2)];
      if (ct != 0.0) acc += cs * ct * f(p + s * h * unit(a) + t * h * unit(b));
    }
  }
  return R(acc / (h * h));
}

}  // namespace

VectorField cartesian_view(SphericalField f) {
  return [f = std::move(f)](const Eigen::Vector3d& p) {
    const SphericalPoint sp = SphericalPoint::from_cartesian(p);
    return to_cartesian(f(sp), sp);
  };
}

Vector3c gradient(const ScalarField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  Vector3c g;
  for (int i = 0; i < 3; ++i) g(i) = first(f, p, i, h, order);
  return g;
}

Complex divergence(const VectorField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  Complex acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += first(f, p, i, h, order)(i);
  return acc;
}

Vector3c curl(const VectorField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  std::array<Vector3c, 3> d;  // d[i] = dF/dx_i
  for (int i = 0; i < 3; ++i) d[static_cast<std::size_t>(i)] = first(f, p, i, h, order);
  return {d[1](2) - d[2](1), d[2](0) - d[0](2), d[0](1) - d[1](0)};
}

Complex laplacian(const ScalarField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  Complex acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += second(f, p, i, h, order);
  return acc;
}

Vector3c vector_laplacian(const VectorField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  Vector3c acc = Vector3c::Zero();
  for (int i = 0; i < 3; ++i) acc += second(f, p, i, h, order);
  return acc;
}

Eigen::Matrix3cd hessian(const ScalarField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  Eigen::Matrix3cd hs;
  for (int i = 0; i < 3; ++i) {
    hs(i, i) = second(f, p, i, h, order);
    for (int j = i + 1; j < 3; ++j) hs(i, j) = hs(j, i) = mixed(f, p, i, j, h, order);
  }
  return hs;
}

Vector3c curl_curl(const VectorField& f, const Eigen::Vector3d& p, double h, int order) {
  check_order(order);
  // (curl curl F)_i = sum_j d_i d_j F_j - lap F_i
  std::array<std::array<Vector3c, 3>, 3> d2;
  for (int i = 0; i < 3; ++i) {
    d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = second(f, p, i, h, order);
    for (int j = i + 1; j < 3; ++j) {
      d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mixed(f, p, i, j, h, order);
      d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  Vector3c out;
  for (int i = 0; i < 3; ++i) {
    Complex grad_div = 0.0, lap = 0.0;
    for (int j = 0; j < 3; ++j) {
      grad_div += d2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](j);
      lap += d2[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)](i);
    }
    out(i) = grad_div - lap;
  }
  return out;
}

}  // namespace bodysphere::oracle
