#pragma once

#include <cmath>
#include <vector>

#include "ccx/moebius_metric.hpp"

namespace ccx {

// A flow element is a bi-infinite geodesic with a marked foot point; the
// geodesic flow moves the foot along the line toward the positive end.
template <class Space>
typename Space::Geodesic flow_shift(const Space& s,
                                    const typename Space::Geodesic& g,
                                    double t) {
  typename Space::Geodesic out = g;
  out.foot = s.geodesic_point(g, t);
  return out;
}

template <class Geodesic>
Geodesic flip(const Geodesic& g) {
  Geodesic out = g;
  out.neg = g.pos;
  out.pos = g.neg;
  return out;
}

// Derivative of the pushforward visual metric f_* rho_x against rho_y,
// evaluated at the end eta.
template <class Space>
double map_derivative(const Space& s, const MoebiusBoundaryMap<Space>& f,
                      const typename Space::Point& x,
                      const typename Space::Point& y,
                      const typename Space::Boundary& eta) {
  auto push = pushforward(s, f, MoebiusMetric<Space>::visual(s, x));
  auto vis = MoebiusMetric<Space>::visual(s, y);
  return metric_derivative(push, vis, eta);
}

// Conjugated flow element: endpoints map through f, and the foot is the
// unique point y on the image line where d(f_* rho_{foot}) / d rho_y equals
// one at the positive end.  Sliding distance t toward the positive end
// raises log d rho_y there by exactly t, so the zero is found in one step.
template <class Space>
typename Space::Geodesic conjugate_flow(const Space& s,
                                        const MoebiusBoundaryMap<Space>& f,
                                        const typename Space::Geodesic& g) {
  auto a = f(g.neg);
  auto b = f(g.pos);
  typename Space::Geodesic line = s.line_through(a, b);
  double t = std::log(map_derivative(s, f, g.foot, line.foot, b));
  line.foot = s.geodesic_point(line, t);
  return line;
}

// Unit tangent sphere at x, materialized as a fan of flow elements footed
// at x, pushed through the conjugacy.
template <class Space>
std::vector<typename Space::Geodesic> conjugate_fan(
    const Space& s, const MoebiusBoundaryMap<Space>& f,
    const typename Space::Point& x, int n) {
  std::vector<typename Space::Geodesic> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const auto& g : s.direction_fan(x, n))
    out.push_back(conjugate_flow(s, f, g));
  return out;
}

}  // namespace ccx
