#include <cmath>

#include "ccx/extension.hpp"
#include "doctest.h"

using namespace ccx;
using MM = MoebiusMetric<DiskSpace>;

TEST_CASE("extension of an isometry boundary recovers the isometry") {
  DiskSpace s(1.0);
  DiskIsometry iso = DiskIsometry::rotation(0.6).compose(
      DiskIsometry::translation_to(DiskPoint::polar(1.0, -0.4)));
  auto f = boundary_map_of(iso);
  DiskPoint x = DiskPoint::polar(1.2, 2.1);
  auto e = circumcenter_extension(s, f, x, 64);
  CHECK(s.distance(e.point, iso.apply(x)) < 1e-5);
  CHECK(std::fabs(e.defect) < 1e-6);
}

TEST_CASE("projection of a visual metric returns its point with zero defect") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 256);
  DiskPoint y = DiskPoint::polar(1.4, 0.9);
  auto e = nearest_visual_projection(s, MM::visual(s, y), grid);
  CHECK(s.distance(e.point, y) < 1e-6);
  CHECK(std::fabs(e.defect) < 1e-7);
}

TEST_CASE("angle certificate holds at the point of a visual metric") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 256);
  DiskPoint y = DiskPoint::polar(0.8, -1.3);
  std::vector<DiskPoint> probes;
  for (int j = 0; j < 8; ++j)
    probes.push_back(s.ray_point(y, s.direction_at(y, 2 * kPi * j / 8), 0.5));
  auto cert = angle_certificate(s, MM::visual(s, y), y, grid, probes);
  CHECK(cert.pass);
  auto off = s.ray_point(y, s.direction_at(y, 0.3), 0.2);
  auto cert2 = angle_certificate(s, MM::visual(s, y), off, grid, probes);
  CHECK_FALSE(cert2.pass);
}
