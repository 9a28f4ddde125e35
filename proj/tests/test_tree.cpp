#include "ccx/tree.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("word reduction cancels doubled letters") {
  CHECK(reduce_word({0, 1, 1, 2}) == TreeWord{0, 2});
  CHECK(concat_reduce({0, 1}, {1, 0, 2}) == TreeWord{2});
  CHECK(concat_reduce({0, 1}, {1, 0}) == TreeWord{});
}

TEST_CASE("vertex distances count edges through the common prefix") {
  TreeSpace s(3);
  TreePoint a{{0}, 0.0}, b{{1}, 0.0}, c{{0, 1, 0}, 0.0};
  CHECK(s.distance(a, b) == doctest::Approx(2.0));
  CHECK(s.distance(a, c) == doctest::Approx(2.0));
  CHECK(s.distance(b, c) == doctest::Approx(4.0));
  CHECK(s.distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("busemann along a ray equals the traversed time") {
  TreeSpace s(3);
  TreeBoundary xi{{}, {0, 1}};
  TreePoint x = s.basepoint();
  TreePoint y = s.ray_point(x, xi, 1.5);
  CHECK(s.busemann(x, y, xi) == doctest::Approx(1.5));
  CHECK(s.busemann(y, x, xi) == doctest::Approx(-1.5));
}

TEST_CASE("gromov product is the depth of the common prefix from the root") {
  TreeSpace s(3);
  TreeBoundary xi{{0, 1}, {0, 1}};
  TreeBoundary eta{{0, 1}, {2, 1}};
  CHECK(s.gromov_product(s.basepoint(), xi, eta) == doctest::Approx(2.0));
}

TEST_CASE("automorphisms preserve distance and invert cleanly") {
  TreeSpace s(3);
  TreeIsometry g = TreeIsometry::translation({0, 1, 2}, 3);
  TreeIsometry p = TreeIsometry::permutation({2, 0, 1});
  TreePoint a{{0, 2}, 0.4}, b{{1}, 0.0};
  for (const TreeIsometry& iso : {g, p}) {
    CHECK(s.distance(s.apply(iso, a), s.apply(iso, b)) ==
          doctest::Approx(s.distance(a, b)));
    TreePoint back = s.apply(iso.inverse(), s.apply(iso, a));
    CHECK(s.distance(back, a) == doctest::Approx(0.0));
  }
}

TEST_CASE("direction fans are footed at their vertex") {
  TreeSpace s(3);
  TreePoint x{{0, 1}, 0.0};
  auto fan = s.direction_fan(x, 6);
  CHECK(fan.size() >= 6);
  for (const auto& g : fan) CHECK(s.distance(g.foot, x) == doctest::Approx(0.0));
}
