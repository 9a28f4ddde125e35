#pragma once

#include <cmath>
#include <vector>

#include "ccx/circumcenter.hpp"
#include "ccx/flow.hpp"
#include "ccx/moebius_metric.hpp"

namespace ccx {

struct ExtensionResult {
  DiskPoint point;
  // d_M(f_* rho_x, rho_{point}): the per-point defect of the extension
  double defect = 0.0;
  MinimizerResult inner;
  std::vector<DiskGeodesic> fan;  // the conjugated unit tangent sphere
};

// Circumcenter extension of a Moebius boundary map at x: conjugate the
// unit-tangent fan at x through the map and take the asymptotic
// circumcenter of the resulting flow set.
inline ExtensionResult circumcenter_extension(
    const DiskSpace& s, const MoebiusBoundaryMap<DiskSpace>& f,
    const DiskPoint& x, int fan_size, const MinimizeOptions& opt = {}) {
  ExtensionResult r;
  r.fan = conjugate_fan(s, f, x, fan_size);
  r.inner = asymptotic_circumcenter(s, r.fan, opt);
  r.point = r.inner.point;
  r.defect = std::log(r.inner.value);
  return r;
}

// Nearest visual metric to rho: minimizes z -> d_M(rho, rho_z), evaluated
// as the grid maximum of log-density gap lambda(xi) + B(z, o, xi), which is
// geodesically convex in z.  The log-density is sampled once up front.
inline ExtensionResult nearest_visual_projection(
    const DiskSpace& s, const MoebiusMetric<DiskSpace>& rho,
    const SampleGrid<DiskSpace>& grid, const MinimizeOptions& opt = {}) {
  std::vector<double> lam;
  lam.reserve(grid.points.size());
  for (const auto& xi : grid.points) lam.push_back(rho.log_density(xi));
  DiskPoint o = s.basepoint();
  std::vector<DiskObjective> comps;
  comps.reserve(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    DiskBoundary xi = grid.points[i];
    double li = lam[i];
    comps.push_back([&s, o, xi, li](const DiskPoint& z) {
      return li + s.busemann(z, o, xi);
    });
  }
  ExtensionResult r;
  r.inner = minimize_components(s, comps, o, opt);
  r.point = r.inner.point;
  r.defect = r.inner.value;
  return r;
}

struct AngleCertificate {
  bool pass = false;
  // min over probes of the widest angle to an active end: at a genuine
  // nearest-point minimizer every probe sees an argmax end at >= pi/2
  double worst_angle = 0.0;
  int active = 0;
  int probes = 0;
};

// Optimality certificate for x* as the nearest visual point to rho: for
// each probe point y, some end eta in the (thickness-widened) argmax set of
// log d rho / d rho_{x*} makes an angle >= pi/2 at x* with the segment
// [x*, y].  A displaced x* fails because every argmax end then leans to one
// side.
inline AngleCertificate angle_certificate(
    const DiskSpace& s, const MoebiusMetric<DiskSpace>& rho,
    const DiskPoint& xstar, const SampleGrid<DiskSpace>& grid,
    const std::vector<DiskPoint>& probes, double thicken = 1e-6,
    double threshold = kPi / 2 - 1e-3) {
  AngleCertificate c;
  c.probes = static_cast<int>(probes.size());
  auto vis = MoebiusMetric<DiskSpace>::visual(s, xstar);
  std::vector<double> gap;
  gap.reserve(grid.points.size());
  double vmax = -1e300;
  for (const auto& xi : grid.points) {
    gap.push_back(rho.log_density(xi) - vis.log_density(xi));
    vmax = std::max(vmax, gap.back());
  }
  std::vector<DiskBoundary> active;
  for (std::size_t i = 0; i < gap.size(); ++i)
    if (gap[i] >= vmax - thicken) active.push_back(grid.points[i]);
  c.active = static_cast<int>(active.size());
  if (active.empty() || probes.empty()) return c;
  double k = s.curvature_scale();
  c.worst_angle = 1e300;
  for (const auto& y : probes) {
    double widest = 0.0;
    for (const auto& eta : active)
      widest = std::max(widest, busemann_angle(s, k, xstar, y, eta));
    c.worst_angle = std::min(c.worst_angle, widest);
  }
  c.pass = c.worst_angle >= threshold;
  return c;
}

}  // namespace ccx
