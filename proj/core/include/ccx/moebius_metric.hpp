#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccx/boundary_calculus.hpp"
#include "ccx/boundary_map.hpp"
#include "ccx/sampling.hpp"

namespace ccx {

// An antipodal boundary metric stored as a log-density against the visual
// metric at the basepoint:  rho(xi, eta) = rho_o(xi, eta) *
// exp((lam(xi) + lam(eta)) / 2).  The geometric mean value theorem says any
// two Moebius metrics are related this way, so one reference metric plus a
// density function covers the whole family.
template <class Space>
class MoebiusMetric {
 public:
  using Point = typename Space::Point;
  using Boundary = typename Space::Boundary;
  using Density = std::function<double(const Boundary&)>;

  enum class Provenance { kVisual, kPushforward, kSynthetic };

  static MoebiusMetric visual(const Space& s, const Point& x) {
    MoebiusMetric m;
    m.space_ = &s;
    m.prov_ = Provenance::kVisual;
    m.validated_ = true;  // visual metrics are Moebius by construction
    Point o = s.basepoint();
    m.lam_ = [&s, x, o](const Boundary& xi) {
      // log rho_x / rho_o at xi equals -B(x, o, xi); the gromov products
      // against a fixed partner cancel in the density sense, and the
      // Busemann form is exact for visual metrics.
      return -s.busemann(x, o, xi);
    };
    m.label_ = "visual";
    return m;
  }

  static MoebiusMetric synthetic(const Space& s, Density lam,
                                 std::string label = "synthetic") {
    MoebiusMetric m;
    m.space_ = &s;
    m.prov_ = Provenance::kSynthetic;
    m.validated_ = false;
    m.lam_ = std::move(lam);
    m.label_ = std::move(label);
    return m;
  }

  const Space& space() const { return *space_; }
  Provenance provenance() const { return prov_; }
  void set_provenance(Provenance p) { prov_ = p; }
  bool validated() const { return validated_; }
  void mark_validated() { validated_ = true; }
  const std::string& label() const { return label_; }

  double log_density(const Boundary& xi) const { return lam_(xi); }

  double operator()(const Boundary& xi, const Boundary& eta) const {
    if (same_boundary(xi, eta)) return 0.0;
    double base = visual_metric(*space_, space_->basepoint(), xi, eta);
    return base * std::exp(0.5 * (lam_(xi) + lam_(eta)));
  }

  // Additive renormalization: shifts the whole log-density by c.
  MoebiusMetric shifted(double c) const {
    MoebiusMetric m = *this;
    Density base = lam_;
    m.lam_ = [base, c](const Boundary& xi) { return base(xi) + c; };
    return m;
  }

 private:
  MoebiusMetric() = default;

  const Space* space_ = nullptr;
  Provenance prov_ = Provenance::kSynthetic;
  bool validated_ = false;
  Density lam_;
  std::string label_;
};

// Radon-Nikodym style derivative d rho2 / d rho1 at xi.
template <class Space>
double metric_derivative(const MoebiusMetric<Space>& rho2,
                         const MoebiusMetric<Space>& rho1,
                         const typename Space::Boundary& xi) {
  return std::exp(rho2.log_density(xi) - rho1.log_density(xi));
}

// Derivative recovered from metric values alone through the geometric mean
// value theorem with two auxiliary points; exercises the three-point
// identity rather than the stored densities.
template <class Space>
double metric_derivative_three_point(const MoebiusMetric<Space>& rho2,
                                     const MoebiusMetric<Space>& rho1,
                                     const typename Space::Boundary& xi,
                                     const typename Space::Boundary& u,
                                     const typename Space::Boundary& v) {
  double num = rho2(xi, u) * rho2(xi, v) * rho1(u, v);
  double den = rho1(xi, u) * rho1(xi, v) * rho2(u, v);
  if (den <= 0.0)
    throw std::invalid_argument("metric_derivative_three_point: degenerate");
  return num / den;
}

// Pushforward f_* rho of a Moebius metric under a validated Moebius boundary
// map: (f_* rho)(xi, eta) derives from rho(f^-1 xi, f^-1 eta) through the
// three-point derivative identity against the basepoint visual metric.
template <class Space>
MoebiusMetric<Space> pushforward(const Space& s,
                                 const MoebiusBoundaryMap<Space>& f,
                                 const MoebiusMetric<Space>& rho) {
  if (!f.validated())
    throw std::invalid_argument("pushforward: map not validated as Moebius");
  using Boundary = typename Space::Boundary;
  auto o = s.basepoint();
  auto lam = [&s, f, rho, o](const Boundary& eta) {
    // E(a, b) = rho(f^-1 a, f^-1 b) is the pulled-back evaluation of the
    // pushforward metric; its density against rho_o at eta is the
    // three-point expression below.
    auto E = [&](const Boundary& a, const Boundary& b) {
      return rho(f.inverse(a), f.inverse(b));
    };
    auto [u, v] = aux_pair(s, eta);
    double num = E(eta, u) * E(eta, v) * visual_metric(s, o, u, v);
    double den = visual_metric(s, o, eta, u) * visual_metric(s, o, eta, v) *
                 E(u, v);
    return std::log(num / den);
  };
  MoebiusMetric<Space> m = MoebiusMetric<Space>::synthetic(
      s, lam, "pushforward(" + rho.label() + ")");
  m.set_provenance(MoebiusMetric<Space>::Provenance::kPushforward);
  if (rho.validated()) m.mark_validated();
  return m;
}

namespace detail {

// One-dimensional golden-section refinement of a boundary function around a
// grid argmax; only the disk has a continuum of directions to refine over.
inline double refine_boundary_max(
    const DiskSpace&, const std::function<double(const DiskBoundary&)>& g,
    double theta, double halfwidth, int budget, double* arg_out) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = theta - halfwidth, b = theta + halfwidth;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = g(DiskBoundary(c)), fd = g(DiskBoundary(d));
  for (int i = 0; i < budget; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = g(DiskBoundary(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = g(DiskBoundary(d));
    }
  }
  double arg = 0.5 * (a + b);
  double val = g(DiskBoundary(arg));
  if (arg_out) *arg_out = arg;
  return val;
}

}  // namespace detail

template <class Space>
struct MaxMinReport {
  double log_max = 0.0;  // max over the boundary of log d rho2 / d rho1
  double log_min = 0.0;
  typename Space::Boundary argmax;
  typename Space::Boundary argmin;
  double product_residual = 0.0;  // |max * min - 1| for the derivative
};

template <class Space>
MaxMinReport<Space> maxmin_report(const MoebiusMetric<Space>& rho2,
                                  const MoebiusMetric<Space>& rho1,
                                  const SampleGrid<Space>& grid) {
  using Boundary = typename Space::Boundary;
  if (grid.points.empty())
    throw std::invalid_argument("maxmin_report: empty grid");
  MaxMinReport<Space> r;
  auto g = [&rho2, &rho1](const Boundary& xi) {
    return rho2.log_density(xi) - rho1.log_density(xi);
  };
  std::size_t imax = 0, imin = 0;
  double vmax = g(grid.points[0]), vmin = vmax;
  for (std::size_t i = 1; i < grid.points.size(); ++i) {
    double v = g(grid.points[i]);
    if (v > vmax) vmax = v, imax = i;
    if (v < vmin) vmin = v, imin = i;
  }
  r.log_max = vmax;
  r.log_min = vmin;
  r.argmax = grid.points[imax];
  r.argmin = grid.points[imin];
  if constexpr (std::is_same_v<Space, DiskSpace>) {
    if (grid.refine_budget > 0 && grid.points.size() >= 2) {
      double h = 2 * kPi / static_cast<double>(grid.points.size());
      double arg;
      double v = detail::refine_boundary_max(rho1.space(), g,
                                             grid.points[imax].angle, h,
                                             grid.refine_budget, &arg);
      if (v > r.log_max) r.log_max = v, r.argmax = DiskBoundary(arg);
      auto neg = [&g](const DiskBoundary& xi) { return -g(xi); };
      v = detail::refine_boundary_max(rho1.space(), neg,
                                      grid.points[imin].angle, h,
                                      grid.refine_budget, &arg);
      if (-v < r.log_min) r.log_min = -v, r.argmin = DiskBoundary(arg);
    }
  }
  r.product_residual = std::fabs(std::exp(r.log_max + r.log_min) - 1.0);
  return r;
}

// Distance in the space of Moebius metrics: sup of log d rho2 / d rho1.
template <class Space>
double metric_space_distance(const MoebiusMetric<Space>& rho1,
                             const MoebiusMetric<Space>& rho2,
                             const SampleGrid<Space>& grid) {
  return maxmin_report(rho2, rho1, grid).log_max;
}

struct MetricValidation {
  bool pass = false;
  double diameter = 0.0;
  double worst_triangle_slack = 0.0;  // min over triples of the slack
  double worst_antipodal_gap = 0.0;   // max over xi of 1 - max_eta rho
  double grid_tolerance = 0.0;
  double suggested_shift = 0.0;  // log-density shift that normalizes diameter
  std::size_t witness[3] = {0, 0, 0};  // grid triple attaining the worst slack
};

// Grid check of the antipodal-metric axioms: symmetry and positivity are
// structural here, so what is tested is the triangle inequality, diameter
// one, and existence of an antipodal partner for every grid direction.  The
// grid tolerance absorbs discretization error in the antipodal search.
template <class Space>
MetricValidation validate_metric(const MoebiusMetric<Space>& rho,
                                 const SampleGrid<Space>& grid) {
  const auto& pts = grid.points;
  std::size_t n = pts.size();
  if (n < 4) throw std::invalid_argument("validate_metric: grid too small");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rho(pts[i], pts[j]);

  MetricValidation v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.diameter = std::max(v.diameter, d[i][j]);

  v.worst_triangle_slack = 1e300;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        double a = d[i][j], b = d[j][k], c = d[i][k];
        double slack = std::min({a + b - c, a + c - b, b + c - a});
        if (slack < v.worst_triangle_slack) {
          v.worst_triangle_slack = slack;
          v.witness[0] = i;
          v.witness[1] = j;
          v.witness[2] = k;
        }
      }

  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) best = std::max(best, d[i][j]);
    v.worst_antipodal_gap = std::max(v.worst_antipodal_gap, 1.0 - best);
  }

  // Discretization allowance: a smooth density varies at second order near
  // the antipode of a grid direction, so tolerance scales with the grid
  // spacing squared times a second-difference bound on the log-density.
  double tol = 1e-9;
  if constexpr (std::is_same_v<Space, DiskSpace>) {
    double h = 2 * kPi / static_cast<double>(n);
    double curv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double lm = rho.log_density(pts[(i + n - 1) % n]);
      double l0 = rho.log_density(pts[i]);
      double lp = rho.log_density(pts[(i + 1) % n]);
      curv = std::max(curv, std::fabs(lp - 2 * l0 + lm) / (h * h));
    }
    tol = std::max(tol, 2.0 * h * h * (1.0 + curv));
  }
  v.grid_tolerance = tol;
  v.suggested_shift = -std::log(v.diameter);
  // triangle tolerance is absolute; diameter must not exceed one, and the
  // diameter/antipodal shortfalls get the grid allowance only
  v.pass = v.worst_triangle_slack >= -1e-9 && v.diameter <= 1.0 + 1e-9 &&
           v.diameter >= 1.0 - tol && v.worst_antipodal_gap <= tol;
  return v;
}

// Enforces the antipodality constraint max_eta rho(xi, eta) = 1 on a disk
// density.  For each direction the row maximum sits near the antipode with
// log-value m(xi); subtracting m from the log-density and repeating drives
// every row maximum to one.  The corrected density is sampled on a fine
// uniform grid and evaluated by linear interpolation.
inline MoebiusMetric<DiskSpace> antipodalize(const DiskSpace& s,
                                             const MoebiusMetric<DiskSpace>& rho,
                                             int n = 4096, int iters = 16) {
  std::vector<double> lam(static_cast<std::size_t>(n));
  double h = 2 * kPi / n;
  for (int i = 0; i < n; ++i) lam[i] = rho.log_density(DiskBoundary(i * h));
  auto interp = [n, h](const std::vector<double>& v, double theta) {
    double u = wrap_angle(theta) / h;
    int i = static_cast<int>(std::floor(u));
    double f = u - i;
    return (1 - f) * v[static_cast<std::size_t>(i % n)] +
           f * v[static_cast<std::size_t>((i + 1) % n)];
  };
  for (int it = 0; it < iters; ++it) {
    std::vector<double> m(lam.size());
    for (int i = 0; i < n; ++i) {
      double theta = i * h;
      // row log-maximum over a window around the antipode
      auto row = [&](const DiskBoundary& b) {
        double delta = wrap_angle(b.angle - theta - kPi);
        if (delta > kPi) delta -= 2 * kPi;
        return std::log(std::cos(delta / 2)) +
               0.5 * (lam[static_cast<std::size_t>(i)] + interp(lam, b.angle));
      };
      m[static_cast<std::size_t>(i)] = detail::refine_boundary_max(
          s, row, theta + kPi, 1.2, 60, nullptr);
    }
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] -= m[i];
  }
  auto density = [lam = std::move(lam), interp](const DiskBoundary& xi) {
    return interp(lam, xi.angle);
  };
  return MoebiusMetric<DiskSpace>::synthetic(s, density,
                                             rho.label() + "-antipodal");
}

// Synthetic disk density built from odd trigonometric harmonics, corrected
// to satisfy the antipodality constraint exactly (odd harmonics alone keep
// antipodal values at one but leave the row maxima slightly off-antipode).
inline MoebiusMetric<DiskSpace> synthetic_harmonic_metric(
    const DiskSpace& s, const std::vector<double>& amp,
    const std::vector<double>& phase) {
  if (amp.size() != phase.size())
    throw std::invalid_argument("synthetic_harmonic_metric: size mismatch");
  auto lam = [amp, phase](const DiskBoundary& xi) {
    double v = 0.0;
    for (std::size_t k = 0; k < amp.size(); ++k)
      v += amp[k] * std::sin((2 * static_cast<double>(k) + 1) * xi.angle +
                             phase[k]);
    return v;
  };
  return antipodalize(
      s, MoebiusMetric<DiskSpace>::synthetic(s, lam, "harmonic"));
}

}  // namespace ccx
