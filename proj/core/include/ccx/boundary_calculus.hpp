#pragma once

#include <cmath>
#include <stdexcept>

#include "ccx/disk.hpp"
#include "ccx/tree.hpp"

namespace ccx {

// rho_x(xi, eta) = exp(-(xi | eta)_x); zero when the endpoints coincide.
template <class Space>
double visual_metric(const Space& s, const typename Space::Point& x,
                     const typename Space::Boundary& xi,
                     const typename Space::Boundary& eta) {
  if (same_boundary(xi, eta)) return 0.0;
  return std::exp(-s.gromov_product(x, xi, eta));
}

// Cross-ratio of four distinct ends with respect to the visual metric at x;
// the value is independent of x.
template <class Space>
double cross_ratio(const Space& s, const typename Space::Point& x,
                   const typename Space::Boundary& xi,
                   const typename Space::Boundary& xip,
                   const typename Space::Boundary& eta,
                   const typename Space::Boundary& etap) {
  if (same_boundary(xi, xip) || same_boundary(xi, eta) ||
      same_boundary(xi, etap) || same_boundary(xip, eta) ||
      same_boundary(xip, etap) || same_boundary(eta, etap))
    throw std::invalid_argument("cross_ratio: points must be distinct");
  return visual_metric(s, x, xi, eta) * visual_metric(s, x, xip, etap) /
         (visual_metric(s, x, xi, etap) * visual_metric(s, x, xip, eta));
}

// Limit comparison angle at x between xi and eta in the curvature -k^2
// model: 2 arcsin(rho_x(xi,eta)^k).
template <class Space>
double comparison_angle(const Space& s, double k,
                        const typename Space::Point& x,
                        const typename Space::Boundary& xi,
                        const typename Space::Boundary& eta) {
  if (!(k > 0)) throw std::invalid_argument("comparison_angle: k > 0");
  if (same_boundary(xi, eta))
    throw std::invalid_argument("comparison_angle: boundary points coincide");
  double rho = visual_metric(s, x, xi, eta);
  return 2 * std::asin(std::min(1.0, std::pow(rho, k)));
}

// Limit comparison angle at x between the interior point y and xi, from
// exp(k B(y,x,xi)) = cosh(k d) - sinh(k d) cos(angle).
template <class Space>
double busemann_angle(const Space& s, double k, const typename Space::Point& x,
                      const typename Space::Point& y,
                      const typename Space::Boundary& xi) {
  double d = s.distance(x, y);
  if (!(d > 0)) throw std::invalid_argument("busemann_angle: y must differ from x");
  double c = (std::cosh(k * d) - std::exp(k * s.busemann(y, x, xi))) /
             std::sinh(k * d);
  if (std::fabs(c) > 1.0 + 1e-9)
    throw std::runtime_error("busemann_angle: inverted cosine out of range");
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Residual of the first-order expansion of log(d rho_y / d rho_x) at xi for
// y = ray_point(x, xi_dir, t); must vanish faster than t.
template <class Space>
double embed_derivative_residual(const Space& s, const typename Space::Point& x,
                                 const typename Space::Boundary& xi_dir,
                                 const typename Space::Boundary& xi, double t) {
  if (!(t > 0) || t > 0.1)
    throw std::invalid_argument("embed_derivative_residual: need 0 < t <= 0.1");
  typename Space::Point y = s.ray_point(x, xi_dir, t);
  double log_deriv = s.busemann(x, y, xi);
  double angle = busemann_angle(s, 1.0, x, y, xi);
  return std::fabs(log_deriv - t * std::cos(angle));
}

}  // namespace ccx
