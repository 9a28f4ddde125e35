#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "ccx/boundary_calculus.hpp"
#include "ccx/sampling.hpp"

namespace ccx {

// Boundary homeomorphism given by callables. Consumers that rely on the
// Moebius property must see a map that passed cross-ratio validation.
template <class Space>
class MoebiusBoundaryMap {
 public:
  using Boundary = typename Space::Boundary;
  using Fn = std::function<Boundary(const Boundary&)>;

  MoebiusBoundaryMap(Fn forward, Fn inverse)
      : fwd_(std::move(forward)), inv_(std::move(inverse)) {}

  Boundary operator()(const Boundary& xi) const { return fwd_(xi); }
  Boundary inverse(const Boundary& xi) const { return inv_(xi); }
  bool validated() const { return validated_; }

  struct Validation {
    bool pass = false;
    double worst_cross_ratio_log_error = 0.0;
    double worst_inverse_error = 0.0;
  };

  // Checks forward/inverse consistency and cross-ratio preservation on
  // random quadruples; marks the map validated on success.
  Validation validate(const Space& s, Rng& rng, int quadruples = 1000,
                      double cr_tol = 1e-7, double inv_tol = 1e-9) {
    Validation v;
    for (int i = 0; i < quadruples; ++i) {
      Boundary q[4];
      bool distinct = true;
      for (auto& b : q) b = random_boundary(s, rng);
      for (int a = 0; a < 4 && distinct; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (same_boundary(q[a], q[b])) {
            distinct = false;
            break;
          }
      if (!distinct) {
        --i;
        continue;
      }
      auto o = s.basepoint();
      double cr = cross_ratio(s, o, q[0], q[1], q[2], q[3]);
      double crf =
          cross_ratio(s, o, fwd_(q[0]), fwd_(q[1]), fwd_(q[2]), fwd_(q[3]));
      v.worst_cross_ratio_log_error = std::max(
          v.worst_cross_ratio_log_error, std::fabs(std::log(crf / cr)));
      double ie = boundary_gap(s, inv_(fwd_(q[0])), q[0]);
      v.worst_inverse_error = std::max(v.worst_inverse_error, ie);
    }
    v.pass = v.worst_cross_ratio_log_error <= cr_tol &&
             v.worst_inverse_error <= inv_tol;
    validated_ = v.pass;
    return v;
  }

  void mark_validated() { validated_ = true; }

 private:
  static double boundary_gap(const DiskSpace&, const DiskBoundary& a,
                             const DiskBoundary& b) {
    double d = std::fabs(wrap_angle(a.angle) - wrap_angle(b.angle));
    return d > kPi ? 2 * kPi - d : d;
  }
  static double boundary_gap(const TreeSpace&, const TreeBoundary& a,
                             const TreeBoundary& b) {
    return same_boundary(a, b) ? 0.0 : 1.0;
  }

  Fn fwd_, inv_;
  bool validated_ = false;
};

// Boundary maps of isometries are Moebius by construction, so they come out
// already validated; arbitrary callables must earn the flag via validate().
inline MoebiusBoundaryMap<DiskSpace> boundary_map_of(const DiskIsometry& g) {
  DiskIsometry gi = g.inverse();
  MoebiusBoundaryMap<DiskSpace> m(
      [g](const DiskBoundary& xi) { return g.apply(xi); },
      [gi](const DiskBoundary& xi) { return gi.apply(xi); });
  m.mark_validated();
  return m;
}

inline MoebiusBoundaryMap<TreeSpace> boundary_map_of(const TreeIsometry& g) {
  TreeIsometry gi = g.inverse();
  MoebiusBoundaryMap<TreeSpace> m(
      [g](const TreeBoundary& xi) { return g.apply(xi); },
      [gi](const TreeBoundary& xi) { return gi.apply(xi); });
  m.mark_validated();
  return m;
}

// A deliberately non-Moebius perturbation of a disk boundary map, for
// negative controls in validation tests.
inline MoebiusBoundaryMap<DiskSpace> corrupt_map(
    const MoebiusBoundaryMap<DiskSpace>& f, double eps = 1e-3) {
  auto fwd = [f, eps](const DiskBoundary& xi) {
    DiskBoundary y = f(xi);
    return DiskBoundary(y.angle + eps * std::sin(3 * y.angle));
  };
  // inverse left as the unperturbed one; validation is expected to fail
  auto inv = [f](const DiskBoundary& xi) { return f.inverse(xi); };
  return {fwd, inv};
}

}  // namespace ccx
