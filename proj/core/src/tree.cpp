#include "ccx/tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

namespace ccx {

namespace {

constexpr double kSnapTol = 1e-12;

std::size_t common_prefix(const TreeWord& a, const TreeWord& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

bool is_prefix(const TreeWord& a, const TreeBoundary& xi) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != xi.letter(i)) return false;
  return true;
}

// Index where two ends first differ; they must be distinct.
std::size_t divergence_index(const TreeBoundary& a, const TreeBoundary& b) {
  std::size_t bound = a.preperiod.size() + b.preperiod.size() +
                      a.period.size() * b.period.size() + 1;
  for (std::size_t i = 0; i < bound; ++i)
    if (a.letter(i) != b.letter(i)) return i;
  throw std::invalid_argument("tree: boundary points coincide");
}

}  // namespace

TreeWord reduce_word(TreeWord w) {
  TreeWord out;
  out.reserve(w.size());
  for (int c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

TreeWord concat_reduce(const TreeWord& a, const TreeWord& b) {
  TreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce_word(std::move(out));
}

TreeWord TreeBoundary::prefix(std::size_t n) const {
  TreeWord w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = letter(i);
  return w;
}

bool same_boundary(const TreeBoundary& a, const TreeBoundary& b) {
  std::size_t bound = a.preperiod.size() + b.preperiod.size() +
                      a.period.size() * b.period.size() + 1;
  for (std::size_t i = 0; i < bound; ++i)
    if (a.letter(i) != b.letter(i)) return false;
  return true;
}

TreeIsometry TreeIsometry::identity(int q) {
  TreeIsometry iso;
  iso.perm.resize(q);
  for (int i = 0; i < q; ++i) iso.perm[i] = i;
  return iso;
}

TreeIsometry TreeIsometry::translation(TreeWord g, int q) {
  TreeIsometry iso = identity(q);
  iso.g = reduce_word(std::move(g));
  return iso;
}

TreeIsometry TreeIsometry::permutation(std::vector<int> perm) {
  TreeIsometry iso;
  iso.perm = std::move(perm);
  return iso;
}

TreeWord TreeIsometry::apply(const TreeWord& w) const {
  TreeWord pw(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) pw[i] = perm[w[i]];
  return concat_reduce(g, pw);
}

TreeBoundary TreeIsometry::apply(const TreeBoundary& xi) const {
  // Expand the preperiod far enough that left cancellation by g cannot
  // reach into the periodic tail.
  std::size_t extra =
      (g.size() / xi.period.size() + 2) * xi.period.size();
  TreeWord pre = xi.prefix(xi.preperiod.size() + extra);
  TreeWord per(xi.period.size());
  for (std::size_t i = 0; i < xi.period.size(); ++i) per[i] = perm[xi.period[i]];
  return {apply(pre), per};
}

TreeIsometry TreeIsometry::inverse() const {
  TreeIsometry inv;
  inv.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.perm[perm[i]] = (int)i;
  TreeWord rg(g.rbegin(), g.rend());
  inv.g.resize(rg.size());
  for (std::size_t i = 0; i < rg.size(); ++i) inv.g[i] = inv.perm[rg[i]];
  return inv;
}

TreeSpace::TreeSpace(int branching, double edge_length)
    : q_(branching), len_(edge_length) {
  if (q_ < 3) throw std::invalid_argument("TreeSpace: branching must be >= 3");
  if (!(len_ > 0))
    throw std::invalid_argument("TreeSpace: edge length must be positive");
}

bool TreeSpace::valid_word(const TreeWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= q_) return false;
    if (i > 0 && w[i] == w[i - 1]) return false;
  }
  return true;
}

void TreeSpace::check_point(const Point& p) const {
  if (!valid_word(p.word)) throw std::domain_error("tree point: bad word");
  if (p.word.empty() && p.offset != 0.0)
    throw std::domain_error("tree point: root has no parent edge");
  if (!(p.offset >= 0 && p.offset < len_))
    throw std::domain_error("tree point: offset out of [0, edge_length)");
}

void TreeSpace::check_boundary(const Boundary& xi) const {
  if (xi.period.empty())
    throw std::domain_error("tree boundary: empty period");
  TreeWord probe = xi.prefix(xi.preperiod.size() + 2 * xi.period.size());
  if (!valid_word(probe))
    throw std::domain_error("tree boundary: word backtracks");
}

double TreeSpace::height(const Point& p) const {
  return (double)p.word.size() * len_ - p.offset;
}

double TreeSpace::distance(const Point& x, const Point& y) const {
  std::size_t cp = common_prefix(x.word, y.word);
  if (cp == std::min(x.word.size(), y.word.size()))
    return std::fabs(height(x) - height(y));
  return (height(x) - (double)cp * len_) + (height(y) - (double)cp * len_);
}

double TreeSpace::busemann(const Point& x, const Point& y,
                           const Boundary& xi) const {
  std::size_t n = std::max(x.word.size(), y.word.size()) + 2;
  Point a{xi.prefix(n), 0.0};
  return distance(x, a) - distance(y, a);
}

double TreeSpace::gromov_product(const Point& x, const Boundary& xi,
                                 const Boundary& eta) const {
  std::size_t m = divergence_index(xi, eta);
  std::size_t n = std::max(m, x.word.size()) + 2;
  Point a{xi.prefix(n), 0.0};
  Point b{eta.prefix(n), 0.0};
  return 0.5 * (distance(x, a) + distance(x, b) - distance(a, b));
}

TreePoint TreeSpace::point_at_height(const TreeWord& branch, double h) const {
  double steps = h / len_;
  auto k = (std::size_t)std::llround(steps);
  if (std::fabs(steps - (double)k) < kSnapTol)
    return {TreeWord(branch.begin(), branch.begin() + k), 0.0};
  auto up = (std::size_t)std::ceil(steps);
  return {TreeWord(branch.begin(), branch.begin() + up),
          (double)up * len_ - h};
}

TreePoint TreeSpace::point_on_ray(const Boundary& xi, double h) const {
  std::size_t need = (std::size_t)std::ceil(h / len_) + 1;
  return point_at_height(xi.prefix(need), h);
}

TreePoint TreeSpace::ray_point(const Point& x, const Boundary& xi,
                               double t) const {
  if (t < 0) throw std::invalid_argument("ray_point: t must be >= 0");
  if (t == 0) return x;
  if (is_prefix(x.word, xi)) return point_on_ray(xi, height(x) + t);
  std::size_t cp = common_prefix(x.word, xi.prefix(x.word.size()));
  double up = height(x) - (double)cp * len_;
  if (t <= up + kSnapTol) return point_at_height(x.word, height(x) - t);
  return point_on_ray(xi, (double)cp * len_ + (t - up));
}

TreeGeodesic TreeSpace::line_through(const Boundary& neg,
                                     const Boundary& pos) const {
  std::size_t m = divergence_index(neg, pos);
  return {neg, pos, Point{pos.prefix(m), 0.0}};
}

TreeGeodesic TreeSpace::line_through(const Boundary& neg, const Boundary& pos,
                                     const Point& foot) const {
  std::size_t m = divergence_index(neg, pos);
  std::size_t n = m + foot.word.size() + 2;
  Point a{neg.prefix(n), 0.0};
  Point b{pos.prefix(n), 0.0};
  if (std::fabs(distance(a, foot) + distance(foot, b) - distance(a, b)) > 1e-9)
    throw std::domain_error("line_through: foot point not on the geodesic");
  return {neg, pos, foot};
}

TreePoint TreeSpace::geodesic_point(const Geodesic& g, double t) const {
  return t >= 0 ? ray_point(g.foot, g.pos, t) : ray_point(g.foot, g.neg, -t);
}

std::vector<TreeBoundary> TreeSpace::directions_at(const Point& x,
                                                   int depth) const {
  if (x.offset != 0.0)
    throw std::invalid_argument("directions_at: point must be a vertex");
  if (depth < 1) throw std::invalid_argument("directions_at: depth >= 1");

  std::vector<Boundary> out;
  // walk(cur, from): `from` is the adjacent vertex we arrived from, empty
  // optional encoded by from == cur.
  std::function<void(const TreeWord&, const TreeWord&, bool, int)> walk =
      [&](const TreeWord& cur, const TreeWord& from, bool has_from,
          int remaining) {
        if (remaining == 0) {
          // extend to a legal periodic end avoiding a step back to `from`
          int banned_child = -1;
          if (has_from && from.size() == cur.size() + 1)
            banned_child = from.back();
          int a0 = -1;
          for (int c = 0; c < q_; ++c) {
            if (!cur.empty() && c == cur.back()) continue;
            if (c == banned_child) continue;
            a0 = c;
            break;
          }
          int b0 = a0 == 0 ? 1 : 0;
          out.push_back({cur, {a0, b0}});
          return;
        }
        if (!cur.empty()) {
          TreeWord parent(cur.begin(), cur.end() - 1);
          if (!(has_from && parent == from))
            walk(parent, cur, true, remaining - 1);
        }
        for (int c = 0; c < q_; ++c) {
          if (!cur.empty() && c == cur.back()) continue;
          TreeWord child = cur;
          child.push_back(c);
          if (has_from && child == from) continue;
          walk(child, cur, true, remaining - 1);
        }
      };
  walk(x.word, x.word, false, depth);
  return out;
}

std::vector<TreeGeodesic> TreeSpace::direction_fan(const Point& x,
                                                   int n) const {
  if (n < 2) throw std::invalid_argument("direction_fan: need n >= 2");
  // smallest depth whose direction count q(q-1)^(d-1) covers n
  int depth = 1;
  std::uint64_t count = q_;
  while (count < (std::uint64_t)n) {
    if (depth >= 32)
      throw std::invalid_argument("direction_fan: n exceeds depth cap");
    count *= (std::uint64_t)(q_ - 1);
    ++depth;
  }
  std::vector<Boundary> dirs = directions_at(x, depth);

  // first edge out of x toward an end: +1 child step or -1 parent step
  auto first_step = [&](const Boundary& xi) -> int {
    if (is_prefix(x.word, xi)) return xi.letter(x.word.size());
    return -1;
  };

  std::vector<Geodesic> fan;
  fan.reserve(n);
  std::size_t total = dirs.size();
  for (int j = 0; j < n; ++j) {
    std::size_t fwd = (std::size_t)j * total / (std::size_t)n;
    std::size_t bwd = (fwd + total / 2) % total;
    while (first_step(dirs[bwd]) == first_step(dirs[fwd]))
      bwd = (bwd + 1) % total;
    fan.push_back(line_through(dirs[bwd], dirs[fwd], x));
  }
  return fan;
}

TreePoint TreeSpace::apply(const TreeIsometry& iso, const Point& p) const {
  TreeWord u = iso.apply(p.word);
  if (p.offset == 0.0) return {u, 0.0};
  TreeWord parent(p.word.begin(), p.word.end() - 1);
  TreeWord v = iso.apply(parent);
  if (v.size() + 1 == u.size()) return {u, p.offset};
  // image of the parent became a child: re-anchor the edge offset
  return {v, len_ - p.offset};
}

}  // namespace ccx
