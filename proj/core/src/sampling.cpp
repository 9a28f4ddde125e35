#include "ccx/sampling.hpp"

namespace ccx {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  std::uint64_t z = master ^ (tag * 0x9e3779b97f4a7c15ull);
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t master, std::uint64_t tag) {
  return Rng(derive_seed(master, tag));
}

TreeBoundary random_boundary(const TreeSpace& s, Rng& rng) {
  std::uniform_int_distribution<int> letter(0, s.branching() - 1);
  std::uniform_int_distribution<int> len(0, 8);
  TreeWord pre;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int c = letter(rng);
    while (!pre.empty() && c == pre.back()) c = letter(rng);
    pre.push_back(c);
  }
  int a = letter(rng);
  while (!pre.empty() && a == pre.back()) a = letter(rng);
  int b = letter(rng);
  while (b == a) b = letter(rng);
  return {pre, {a, b}};
}

TreePoint random_point(const TreeSpace& s, Rng& rng, double hmax) {
  TreeBoundary xi = random_boundary(s, rng);
  std::uniform_real_distribution<double> u(0.0, hmax);
  return s.ray_point(s.basepoint(), xi, u(rng));
}

std::pair<TreeBoundary, TreeBoundary> aux_pair(const TreeSpace& s,
                                               const TreeBoundary& xi) {
  (void)s;
  int first = xi.letter(0);
  TreeBoundary cand[3] = {{{}, {0, 1}}, {{}, {1, 2}}, {{}, {2, 0}}};
  std::pair<TreeBoundary, TreeBoundary> out{cand[0], cand[1]};
  int got = 0;
  for (const auto& c : cand) {
    if (c.period[0] == first) continue;
    if (got == 0)
      out.first = c;
    else if (got == 1)
      out.second = c;
    if (++got == 2) break;
  }
  return out;
}

SampleGrid<DiskSpace> make_grid(const DiskSpace&, int n) {
  if (n < 16) throw std::invalid_argument("make_grid: need n >= 16");
  SampleGrid<DiskSpace> g;
  g.points.reserve(n);
  for (int i = 0; i < n; ++i)
    g.points.emplace_back(2 * kPi * i / n);
  return g;
}

SampleGrid<TreeSpace> make_grid(const TreeSpace& s, int n) {
  if (n < 16) throw std::invalid_argument("make_grid: need n >= 16");
  int depth = 1;
  std::uint64_t count = s.branching();
  while (count < (std::uint64_t)n && depth < 24) {
    count *= (std::uint64_t)(s.branching() - 1);
    ++depth;
  }
  SampleGrid<TreeSpace> g;
  g.points = s.directions_at(s.basepoint(), depth);
  g.refine_budget = 0;
  return g;
}

}  // namespace ccx
