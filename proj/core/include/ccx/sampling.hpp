#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ccx/disk.hpp"
#include "ccx/tree.hpp"

namespace ccx {

using Rng = std::mt19937_64;

// Derives an independent, reproducible stream from a master seed and a tag
// (splitmix64 over the xor).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag);
Rng make_rng(std::uint64_t master, std::uint64_t tag);

inline DiskBoundary random_boundary(const DiskSpace&, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  return DiskBoundary(u(rng));
}

// Interior point uniform in direction with radius uniform in [0, rmax]
// (hyperbolic radius).
inline DiskPoint random_point(const DiskSpace&, Rng& rng, double rmax = 3.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return DiskPoint::polar(rmax * u(rng), 2 * kPi * u(rng));
}

TreeBoundary random_boundary(const TreeSpace& s, Rng& rng);
TreePoint random_point(const TreeSpace& s, Rng& rng, double hmax = 6.0);

// Two auxiliary ends well separated from xi and from each other; used by
// the three-point derivative formula.
inline std::pair<DiskBoundary, DiskBoundary> aux_pair(const DiskSpace&,
                                                      const DiskBoundary& xi) {
  return {DiskBoundary(xi.angle + 2 * kPi / 3),
          DiskBoundary(xi.angle - 2 * kPi / 3)};
}

std::pair<TreeBoundary, TreeBoundary> aux_pair(const TreeSpace& s,
                                               const TreeBoundary& xi);

// Finite sample of the boundary used to approximate sup over all ends.
template <class Space>
struct SampleGrid {
  std::vector<typename Space::Boundary> points;
  int refine_budget = 48;
};

// n equally spaced directions.
SampleGrid<DiskSpace> make_grid(const DiskSpace& s, int n);

// All cylinders at the smallest depth whose direction count reaches n;
// tree grids are exact, no refinement.
SampleGrid<TreeSpace> make_grid(const TreeSpace& s, int n);

}  // namespace ccx
