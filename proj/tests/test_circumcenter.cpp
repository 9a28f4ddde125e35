#include <cmath>

#include "ccx/circumcenter.hpp"
#include "ccx/flow.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("circumcenter of a symmetric pair is the midpoint") {
  DiskSpace s(1.0);
  auto res = circumcenter(s, {DiskPoint::polar(1.0, 0.0), DiskPoint::polar(1.0, kPi)});
  CHECK(res.certified);
  CHECK(s.distance(res.point, DiskPoint::origin()) < 1e-7);
  CHECK(res.value == doctest::Approx(std::cosh(1.0)).epsilon(1e-8));
}

TEST_CASE("circumcenter of a singleton is the point itself") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.3, 0.8);
  auto res = circumcenter(s, {x});
  CHECK(s.distance(res.point, x) < 1e-7);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("asymptotic center of the origin fan is the origin") {
  DiskSpace s(1.0);
  auto fan = s.direction_fan(DiskPoint::origin(), 64);
  auto res = asymptotic_circumcenter(s, fan);
  CHECK(s.distance(res.point, DiskPoint::origin()) < 1e-7);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("objective along a single ray decays exponentially") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(2.5), DiskBoundary(0.4));
  g = flow_shift(s, g, -0.3);
  DiskPoint z = s.ray_point(g.foot, g.pos, 2.0);
  CHECK(u_k_eval(s, {g}, z) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("coinciding forward endpoints are rejected") {
  DiskSpace s(1.0);
  DiskBoundary xi(0.3);
  DiskGeodesic g1 = s.line_through(DiskBoundary(1.5), xi);
  DiskGeodesic g2 = s.line_through(DiskBoundary(2.5), xi);
  CHECK_THROWS_AS(asymptotic_circumcenter(s, {g1, g2}), std::invalid_argument);
}

TEST_CASE("convexity probe accepts cosh-distance and rejects its negation") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(2.8), DiskBoundary(0.9));
  DiskPoint p = DiskPoint::polar(0.7, 1.8);
  auto f = [&](const DiskPoint& z) { return std::cosh(s.distance(z, p)); };
  CHECK(convexity_probe(s, f, g, 0.4, 1e-2) <= 1e-10);
  DiskGeodesic through = s.line_through(DiskBoundary(2.8), DiskBoundary(0.9));
  auto neg = [&](const DiskPoint& z) { return -s.distance(z, through.foot); };
  // probed across the kink at the foot, the barrier test must fail
  CHECK(convexity_probe(s, neg, through, 0.0, 1e-2) > 1e-4);
}
