#pragma once

#include <functional>
#include <vector>

#include "ccx/disk.hpp"

namespace ccx {

using DiskObjective = std::function<double(const DiskPoint&)>;

struct MinimizeOptions {
  double pos_tol = 1e-9;
  double val_tol = 1e-13;
  int max_sweeps = 200;
  double init_step = 0.5;
  int golden_iters = 90;
  double probe_radius = 1e-6;
  double probe_slack = 1e-10;
  int probes = 8;
};

struct MinimizerResult {
  DiskPoint point;
  double value = 0.0;
  int sweeps = 0;
  bool certified = false;
  // min over probe directions of F(probe) - F(point); nonnegative up to
  // slack at a genuine local minimum
  double certificate_margin = 0.0;
};

// Minimizes the pointwise maximum of geodesically convex components by
// epsilon-active-set descent: the search direction minimizes the worst
// directional derivative over the near-active components, the line search
// is golden-section on the (convex) restriction, and the active threshold
// shrinks as descent directions dry up.  A probe certificate plus a
// Nelder-Mead polish guard the result.
MinimizerResult minimize_components(const DiskSpace& s,
                                    const std::vector<DiskObjective>& comps,
                                    const DiskPoint& start,
                                    const MinimizeOptions& opt = {});

// Single smooth objective: the one-component special case.
MinimizerResult minimize_on_disk(const DiskSpace& s, const DiskObjective& f,
                                 const DiskPoint& start,
                                 const MinimizeOptions& opt = {});

// Circumcenter of a finite point set: minimizer of max_i cosh d(z, p_i).
MinimizerResult circumcenter(const DiskSpace& s,
                             const std::vector<DiskPoint>& pts,
                             const MinimizeOptions& opt = {});

// u_K(z) = max over flow elements of exp B(z, foot, pos); the function
// whose minimizer is the asymptotic circumcenter of K.
double u_k_eval(const DiskSpace& s, const std::vector<DiskGeodesic>& flows,
                const DiskPoint& z);

// Minimizer of u_K.  Throws if every positive endpoint coincides (the
// minimum is then at infinity).
MinimizerResult asymptotic_circumcenter(const DiskSpace& s,
                                        const std::vector<DiskGeodesic>& flows,
                                        const MinimizeOptions& opt = {});

struct ConvergenceRow {
  double t = 0.0;
  double center_gap = 0.0;  // d(c(A_t), asymptotic center)
  double value_gap = 0.0;   // sup over probes of |u_t - u_K|
};

// Flows every element of K forward by each time, circumcenters the foot
// set A_t, and compares with the asymptotic circumcenter; u_t(z) =
// 2 e^{-t} max_i cosh d(z, a_i).
std::vector<ConvergenceRow> circumcenter_flow_convergence(
    const DiskSpace& s, const std::vector<DiskGeodesic>& flows,
    const std::vector<double>& times, const MinimizeOptions& opt = {});

// Barrier-sense convexity probe for f along the geodesic g at parameter t0:
// returns f(t0) - (f(t0-h) + f(t0+h)) / (2 cosh(k h)), which is <= 0 (up to
// tolerance) for functions convex in the curvature -k^2 comparison sense.
double convexity_probe(const DiskSpace& s, const DiskObjective& f,
                       const DiskGeodesic& g, double t0, double h);

}  // namespace ccx
