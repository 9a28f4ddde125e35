#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccx {

// Vertices of the q-regular tree are reduced words over {0,...,q-1} with no
// two equal consecutive letters (the Cayley graph of the free product of q
// copies of Z/2). The root is the empty word.
using TreeWord = std::vector<int>;

// Cancels adjacent equal letters until the word is reduced.
TreeWord reduce_word(TreeWord w);

TreeWord concat_reduce(const TreeWord& a, const TreeWord& b);

// Interior point: lies on the edge from parent(word) to word, at distance
// `offset` from the vertex `word` toward its parent, offset in [0, L).
// The root is (empty word, 0).
struct TreePoint {
  TreeWord word;
  double offset = 0.0;
};

// End of the tree: an eventually periodic legal infinite word.
struct TreeBoundary {
  TreeWord preperiod;
  TreeWord period;  // nonempty

  int letter(std::size_t i) const {
    return i < preperiod.size()
               ? preperiod[i]
               : period[(i - preperiod.size()) % period.size()];
  }
  TreeWord prefix(std::size_t n) const;
};

bool same_boundary(const TreeBoundary& a, const TreeBoundary& b);

struct TreeGeodesic {
  TreeBoundary neg;
  TreeBoundary pos;
  TreePoint foot;
};

// Isometry of the tree: a letter permutation followed by left translation
// by a group word, w -> reduce(g . perm(w)).
struct TreeIsometry {
  TreeWord g;
  std::vector<int> perm;  // permutation of {0,...,q-1}

  static TreeIsometry identity(int q);
  static TreeIsometry translation(TreeWord g, int q);
  static TreeIsometry permutation(std::vector<int> perm);

  TreeWord apply(const TreeWord& w) const;
  TreeBoundary apply(const TreeBoundary& xi) const;
  TreeIsometry inverse() const;
};

// The q-regular simplicial tree, q >= 3, with a common edge length.
class TreeSpace {
 public:
  using Point = TreePoint;
  using Boundary = TreeBoundary;
  using Geodesic = TreeGeodesic;

  explicit TreeSpace(int branching, double edge_length = 1.0);

  int branching() const { return q_; }
  double edge_length() const { return len_; }
  Point basepoint() const { return {}; }

  bool valid_word(const TreeWord& w) const;
  void check_point(const Point& p) const;
  void check_boundary(const Boundary& xi) const;

  // Distance from the root along the branch of p.
  double height(const Point& p) const;

  double distance(const Point& x, const Point& y) const;
  double busemann(const Point& x, const Point& y, const Boundary& xi) const;
  double gromov_product(const Point& x, const Boundary& xi,
                        const Boundary& eta) const;

  Point ray_point(const Point& x, const Boundary& xi, double t) const;

  Geodesic line_through(const Boundary& neg, const Boundary& pos) const;
  Geodesic line_through(const Boundary& neg, const Boundary& pos,
                        const Point& foot) const;
  Point geodesic_point(const Geodesic& g, double t) const;

  // All boundary directions seen from vertex x at the given path depth,
  // in depth-first order; each is completed to a legal periodic end.
  std::vector<Boundary> directions_at(const Point& x, int depth) const;

  // n geodesic lines footed at the vertex x, forward endpoints spread over
  // the smallest depth whose direction count reaches n.
  std::vector<Geodesic> direction_fan(const Point& x, int n) const;

  TreePoint apply(const TreeIsometry& iso, const Point& p) const;

 private:
  Point point_at_height(const TreeWord& branch, double h) const;
  Point point_on_ray(const Boundary& xi, double h) const;

  int q_;
  double len_;
};

}  // namespace ccx
