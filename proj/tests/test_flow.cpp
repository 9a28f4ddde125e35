#include <cmath>

#include "ccx/flow.hpp"
#include "ccx/sampling.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("flow shifts compose additively along the line") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(2.0), DiskBoundary(0.1));
  DiskGeodesic a = flow_shift(s, flow_shift(s, g, 0.7), -1.9);
  DiskGeodesic b = flow_shift(s, g, -1.2);
  CHECK(s.distance(a.foot, b.foot) < 1e-12);
}

TEST_CASE("flip swaps the ends and keeps the foot") {
  DiskSpace s(1.0);
  DiskGeodesic g = s.line_through(DiskBoundary(2.0), DiskBoundary(0.1));
  DiskGeodesic h = flip(g);
  CHECK(h.pos.angle == doctest::Approx(g.neg.angle));
  CHECK(s.distance(h.foot, g.foot) == doctest::Approx(0.0));
}

TEST_CASE("isometry boundary maps pass cross-ratio validation") {
  DiskSpace s(1.0);
  Rng rng = make_rng(3, 0);
  auto f = boundary_map_of(
      DiskIsometry::rotation(0.4).compose(
          DiskIsometry::translation_to(DiskPoint::polar(1.2, 0.7))));
  CHECK(f.validated());
  auto v = f.validate(s, rng, 500);
  CHECK(v.pass);
  CHECK(v.worst_cross_ratio_log_error < 1e-7);
  auto bad = corrupt_map(f);
  auto vb = bad.validate(s, rng, 200);
  CHECK_FALSE(vb.pass);
}

TEST_CASE("conjugation by a rotation rotates the flow element") {
  DiskSpace s(1.0);
  auto f = boundary_map_of(DiskIsometry::rotation(kPi / 2));
  DiskGeodesic g = s.line_through(DiskBoundary(kPi), DiskBoundary(0.0));
  g = flow_shift(s, g, 0.8);
  DiskGeodesic c = conjugate_flow(s, f, g);
  CHECK(c.pos.angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(s.distance(c.foot, DiskPoint::polar(0.8, kPi / 2)) < 1e-10);
}

TEST_CASE("map derivative of an isometry matches the busemann form") {
  DiskSpace s(1.0);
  DiskIsometry iso = DiskIsometry::translation_to(DiskPoint::polar(0.9, 1.4));
  auto f = boundary_map_of(iso);
  DiskPoint x = DiskPoint::polar(1.1, -0.3), y = DiskPoint::polar(0.5, 2.0);
  DiskBoundary eta(0.9);
  // f_* rho_x = rho_{iso x}, so the derivative is exp B(y, iso x, eta)
  CHECK(map_derivative(s, f, x, y, eta) ==
        doctest::Approx(std::exp(s.busemann(y, iso.apply(x), eta)))
            .epsilon(1e-9));
}
