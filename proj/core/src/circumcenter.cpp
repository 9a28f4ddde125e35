#include "ccx/circumcenter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ccx {
namespace {

DiskPoint move(const DiskSpace& s, const DiskPoint& z, double phi, double t) {
  if (t == 0.0) return z;
  if (t > 0) return s.ray_point(z, s.direction_at(z, phi), t);
  return s.ray_point(z, s.direction_at(z, phi + kPi), -t);
}

// Golden-section minimum of a convex function of one variable; brackets by
// doubling steps away from zero first.
double line_min(const std::function<double(double)>& g, double h, int iters,
                double width_tol) {
  double m = 0.0, fm = g(0.0);
  double a = -h, b = h;
  double fa = g(a), fb = g(b);
  int guard = 0;
  while (fa < fm && guard++ < 60) {
    b = m;
    fb = fm;
    m = a;
    fm = fa;
    a = m - 2 * (b - m);
    fa = g(a);
  }
  while (fb < fm && guard++ < 60) {
    a = m;
    fa = fm;
    m = b;
    fm = fb;
    b = m + 2 * (m - a);
    fb = g(b);
  }
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = g(c), fd = g(d);
  for (int i = 0; i < iters && (b - a) > width_tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = g(d);
    }
  }
  return 0.5 * (a + b);
}

struct Probe {
  double margin;
  int worst;
};

Probe probe_certificate(const DiskSpace& s, const DiskObjective& f,
                        const DiskPoint& z, double value,
                        const MinimizeOptions& opt) {
  Probe p{1e300, -1};
  for (int i = 0; i < opt.probes; ++i) {
    double phi = 2 * kPi * i / opt.probes;
    double m = f(move(s, z, phi, opt.probe_radius)) - value;
    if (m < p.margin) p = {m, i};
  }
  return p;
}

// Plain Nelder-Mead on Poincare coordinates, used only to escape the rare
// stall of coordinate descent on a nonsmooth max objective.
DiskPoint nelder_mead(const DiskObjective& f, const DiskPoint& start,
                      double size, int iters) {
  auto eval = [&f](const std::array<double, 2>& p) {
    double n = std::hypot(p[0], p[1]);
    if (n >= 1.0 - 1e-12) return 1e300;
    return f(DiskPoint::cartesian(p[0], p[1]));
  };
  std::array<std::array<double, 2>, 3> v;
  v[0] = {start.u(), start.v()};
  v[1] = {v[0][0] + size, v[0][1]};
  v[2] = {v[0][0], v[0][1] + size};
  std::array<double, 3> fv{eval(v[0]), eval(v[1]), eval(v[2])};
  for (int it = 0; it < iters; ++it) {
    std::array<int, 3> ord{0, 1, 2};
    std::sort(ord.begin(), ord.end(),
              [&fv](int a, int b) { return fv[a] < fv[b]; });
    int lo = ord[0], mid = ord[1], hi = ord[2];
    double diam = std::max(std::hypot(v[hi][0] - v[lo][0], v[hi][1] - v[lo][1]),
                           std::hypot(v[mid][0] - v[lo][0], v[mid][1] - v[lo][1]));
    if (diam < 1e-12) break;
    std::array<double, 2> cen{0.5 * (v[lo][0] + v[mid][0]),
                              0.5 * (v[lo][1] + v[mid][1])};
    auto blend = [&cen, &v, hi](double w) {
      return std::array<double, 2>{cen[0] + w * (cen[0] - v[hi][0]),
                                   cen[1] + w * (cen[1] - v[hi][1])};
    };
    auto refl = blend(1.0);
    double fr = eval(refl);
    if (fr < fv[lo]) {
      auto exp2 = blend(2.0);
      double fe = eval(exp2);
      if (fe < fr) {
        v[hi] = exp2;
        fv[hi] = fe;
      } else {
        v[hi] = refl;
        fv[hi] = fr;
      }
    } else if (fr < fv[mid]) {
      v[hi] = refl;
      fv[hi] = fr;
    } else {
      auto con = blend(fr < fv[hi] ? 0.5 : -0.5);
      double fc = eval(con);
      if (fc < std::min(fr, fv[hi])) {
        v[hi] = con;
        fv[hi] = fc;
      } else {
        for (int i : {mid, hi}) {
          v[i] = {0.5 * (v[i][0] + v[lo][0]), 0.5 * (v[i][1] + v[lo][1])};
          fv[i] = eval(v[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (fv[i] < fv[best]) best = i;
  return DiskPoint::cartesian(v[best][0], v[best][1]);
}

}  // namespace

MinimizerResult minimize_components(const DiskSpace& s,
                                    const std::vector<DiskObjective>& comps,
                                    const DiskPoint& start,
                                    const MinimizeOptions& opt) {
  if (comps.empty())
    throw std::invalid_argument("minimize_components: empty objective");
  auto f = [&comps](const DiskPoint& z) {
    double m = -1e300;
    for (const auto& c : comps) m = std::max(m, c(z));
    return m;
  };
  MinimizerResult r;
  r.point = start;
  std::vector<double> vals(comps.size());
  auto eval_all = [&comps, &vals](const DiskPoint& z) {
    double m = -1e300;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      vals[i] = comps[i](z);
      m = std::max(m, vals[i]);
    }
    return m;
  };
  r.value = eval_all(r.point);
  const double scale = std::max(1.0, std::fabs(r.value));
  const double slope_tol = 3e-9 * scale;  // numeric-derivative noise floor
  const double eps_min = 1e-13 * scale;
  const double h = 1e-6;  // central-difference width for slopes
  double eps = 1e-2 * scale;
  double step = opt.init_step;
  while (r.sweeps < opt.max_sweeps) {
    ++r.sweeps;
    // Directional derivative of every near-active component is
    // a cos(phi) + b sin(phi); measure a, b by central differences.
    std::vector<double> av, bv;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (vals[i] < r.value - eps) continue;
      av.push_back((comps[i](move(s, r.point, 0.0, h)) -
                    comps[i](move(s, r.point, kPi, h))) /
                   (2 * h));
      bv.push_back((comps[i](move(s, r.point, kPi / 2, h)) -
                    comps[i](move(s, r.point, 3 * kPi / 2, h))) /
                   (2 * h));
    }
    auto worst_slope = [&av, &bv](double phi) {
      double c = std::cos(phi), sn = std::sin(phi);
      double w = -1e300;
      for (std::size_t i = 0; i < av.size(); ++i)
        w = std::max(w, av[i] * c + bv[i] * sn);
      return w;
    };
    // Direction subproblem: minimize the worst slope over directions.
    double best_phi = 0.0, best = worst_slope(0.0);
    const int n0 = 128;
    for (int i = 1; i < n0; ++i) {
      double phi = 2 * kPi * i / n0;
      double w = worst_slope(phi);
      if (w < best) {
        best = w;
        best_phi = phi;
      }
    }
    double width = 2 * kPi / n0;
    for (int round = 0; round < 10; ++round) {
      for (int i = -8; i <= 8; ++i) {
        double phi = best_phi + width * i / 8.0;
        double w = worst_slope(phi);
        if (w < best) {
          best = w;
          best_phi = phi;
        }
      }
      width /= 8.0;
    }
    if (best >= -slope_tol) {
      // No usable descent among eps-active components: either refine the
      // active threshold or accept stationarity.
      if (eps <= eps_min) break;
      eps = std::max(eps_min, eps * 1e-3);
      continue;
    }
    auto g = [&](double t) { return f(move(s, r.point, best_phi, t)); };
    double t = line_min(g, step, opt.golden_iters, opt.pos_tol * 1e-3);
    double val = g(t);
    if (val < r.value) {
      r.point = move(s, r.point, best_phi, t);
      double before = r.value;
      r.value = eval_all(r.point);
      step = std::min(opt.init_step, std::max(1e-6, 4 * std::fabs(t)));
      if (std::fabs(t) < opt.pos_tol && before - r.value < opt.val_tol) {
        if (eps <= eps_min) break;
        eps = std::max(eps_min, eps * 1e-3);
      }
    } else {
      if (eps <= eps_min) break;
      eps = std::max(eps_min, eps * 1e-3);
    }
  }
  Probe p = probe_certificate(s, f, r.point, r.value, opt);
  if (p.margin < -opt.probe_slack) {
    DiskPoint alt = nelder_mead(f, r.point, 1e-3, 800);
    double fv = eval_all(alt);
    if (fv < r.value) {
      r.point = alt;
      r.value = fv;
    }
    p = probe_certificate(s, f, r.point, r.value, opt);
  }
  r.certificate_margin = p.margin;
  r.certified = p.margin >= -opt.probe_slack;
  return r;
}

MinimizerResult minimize_on_disk(const DiskSpace& s, const DiskObjective& f,
                                 const DiskPoint& start,
                                 const MinimizeOptions& opt) {
  return minimize_components(s, {f}, start, opt);
}

MinimizerResult circumcenter(const DiskSpace& s,
                             const std::vector<DiskPoint>& pts,
                             const MinimizeOptions& opt) {
  if (pts.empty()) throw std::invalid_argument("circumcenter: empty set");
  double su = 0.0, sv = 0.0;
  for (const auto& p : pts) {
    su += p.u();
    sv += p.v();
  }
  DiskPoint start =
      DiskPoint::cartesian(su / static_cast<double>(pts.size()),
                           sv / static_cast<double>(pts.size()));
  std::vector<DiskObjective> comps;
  comps.reserve(pts.size());
  for (const auto& p : pts)
    comps.push_back(
        [&s, p](const DiskPoint& z) { return std::cosh(s.distance(z, p)); });
  return minimize_components(s, comps, start, opt);
}

double u_k_eval(const DiskSpace& s, const std::vector<DiskGeodesic>& flows,
                const DiskPoint& z) {
  if (flows.empty()) throw std::invalid_argument("u_k_eval: empty set");
  double m = -1e300;
  for (const auto& g : flows)
    m = std::max(m, std::exp(s.busemann(z, g.foot, g.pos)));
  return m;
}

MinimizerResult asymptotic_circumcenter(const DiskSpace& s,
                                        const std::vector<DiskGeodesic>& flows,
                                        const MinimizeOptions& opt) {
  if (flows.empty())
    throw std::invalid_argument("asymptotic_circumcenter: empty set");
  bool spread = false;
  for (const auto& g : flows)
    if (!same_boundary(g.pos, flows.front().pos)) {
      spread = true;
      break;
    }
  if (!spread)
    throw std::invalid_argument(
        "asymptotic_circumcenter: all positive endpoints coincide");
  double su = 0.0, sv = 0.0;
  for (const auto& g : flows) {
    su += g.foot.u();
    sv += g.foot.v();
  }
  DiskPoint start =
      DiskPoint::cartesian(su / static_cast<double>(flows.size()),
                           sv / static_cast<double>(flows.size()));
  std::vector<DiskObjective> comps;
  comps.reserve(flows.size());
  for (const auto& g : flows)
    comps.push_back([&s, g](const DiskPoint& z) {
      return std::exp(s.busemann(z, g.foot, g.pos));
    });
  return minimize_components(s, comps, start, opt);
}

std::vector<ConvergenceRow> circumcenter_flow_convergence(
    const DiskSpace& s, const std::vector<DiskGeodesic>& flows,
    const std::vector<double>& times, const MinimizeOptions& opt) {
  MinimizerResult lim = asymptotic_circumcenter(s, flows, opt);
  // fixed probe points in the radius-1 ball for the uniform value gap
  std::vector<DiskPoint> probes;
  for (int i = 0; i < 12; ++i)
    probes.push_back(DiskPoint::polar(1.0, 2 * kPi * i / 12));
  probes.push_back(lim.point);
  std::vector<ConvergenceRow> rows;
  for (double t : times) {
    std::vector<DiskPoint> at;
    at.reserve(flows.size());
    for (const auto& g : flows) at.push_back(s.geodesic_point(g, t));
    MinimizerResult ct = circumcenter(s, at, opt);
    ConvergenceRow row;
    row.t = t;
    row.center_gap = s.distance(ct.point, lim.point);
    for (const auto& z : probes) {
      double ut = 1.0;
      for (const auto& a : at) ut = std::max(ut, std::cosh(s.distance(z, a)));
      ut *= 2 * std::exp(-t);
      row.value_gap =
          std::max(row.value_gap, std::fabs(ut - u_k_eval(s, flows, z)));
    }
    rows.push_back(row);
  }
  return rows;
}

double convexity_probe(const DiskSpace& s, const DiskObjective& f,
                       const DiskGeodesic& g, double t0, double h) {
  if (!(h > 0)) throw std::invalid_argument("convexity_probe: h > 0");
  double mid = f(s.geodesic_point(g, t0));
  double lo = f(s.geodesic_point(g, t0 - h));
  double hi = f(s.geodesic_point(g, t0 + h));
  return mid - (lo + hi) / (2 * std::cosh(s.curvature_scale() * h));
}

}  // namespace ccx
