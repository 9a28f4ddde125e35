#include <cmath>

#include "ccx/disk.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("polar radius is hyperbolic distance from the origin") {
  DiskSpace s(1.0);
  for (double r : {0.1, 0.7, 2.0, 3.5})
    CHECK(s.distance(DiskPoint::origin(), DiskPoint::polar(r, 1.2)) ==
          doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("distance along a diameter matches the log formula") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::cartesian(0.5, 0.0);
  CHECK(s.distance(DiskPoint::origin(), x) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("ray points sit at the requested distance toward the end") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.1, 0.4);
  DiskBoundary xi(2.0);
  DiskPoint a = s.ray_point(x, xi, 1.0);
  DiskPoint b = s.ray_point(x, xi, 2.5);
  CHECK(s.distance(x, a) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(s.distance(a, b) == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("line through antipodal ends passes through the origin") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(kPi), DiskBoundary(0.0));
  CHECK(g.foot.r == doctest::Approx(0.0));
  DiskPoint p = s.geodesic_point(g, 1.0);
  CHECK(s.distance(p, DiskPoint::polar(1.0, 0.0)) < 1e-10);
}

TEST_CASE("line parameter is the signed coordinate of the projection") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(kPi), DiskBoundary(0.0));
  // a point on the perpendicular through the foot projects to parameter 0
  CHECK(std::fabs(s.line_parameter(g, DiskPoint::polar(1.0, kPi / 2))) < 1e-10);
  CHECK(s.line_parameter(g, s.geodesic_point(g, -0.7)) ==
        doctest::Approx(-0.7).epsilon(1e-10));
}

TEST_CASE("isometries compose and translate the origin as stated") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.4, 0.9);
  DiskIsometry t = DiskIsometry::translation_to(x);
  CHECK(s.distance(t.apply(DiskPoint::origin()), x) < 1e-12);
  DiskIsometry r = DiskIsometry::rotation(0.8);
  CHECK(r.apply(DiskPoint::origin()).r < 1e-12);
  DiskIsometry c = t.compose(t.inverse());
  DiskPoint y = DiskPoint::polar(2.0, -1.0);
  CHECK(s.distance(c.apply(y), y) < 1e-10);
}

TEST_CASE("direction fan is footed at its base with spread endpoints") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(0.9, 2.2);
  auto fan = s.direction_fan(x, 8);
  REQUIRE(fan.size() == 8);
  for (const auto& g : fan) CHECK(s.distance(g.foot, x) < 1e-10);
}

TEST_CASE("curvature scale divides all distances") {
  DiskSpace s1(1.0), s2(2.0);
  DiskPoint x = DiskPoint::polar(1.0, 0.3), y = DiskPoint::polar(2.2, -0.8);
  CHECK(s2.distance(x, y) == doctest::Approx(s1.distance(x, y) / 2).epsilon(1e-13));
}
