#include <cmath>

#include "ccx/serialization.hpp"
#include "doctest.h"

using namespace ccx;
using MM = MoebiusMetric<DiskSpace>;

TEST_CASE("metric json records provenance, base point, and samples") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 64);
  MM m = MM::visual(s, DiskPoint::polar(1.0, 0.7));
  auto j = metric_json(s, m, grid);
  CHECK(j["provenance"] == "visual");
  CHECK(j["validated"] == true);
  CHECK(j["base_point"]["u"] == doctest::Approx(0.0));
  CHECK(j["samples"].size() == 64);
}

TEST_CASE("round trip through json reproduces the sampled density") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 512);
  MM m = synthetic_harmonic_metric(s, {0.07, 0.02}, {0.4, 2.2});
  auto back = metric_from_json(s, metric_json(s, m, grid));
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    DiskBoundary xi(2 * kPi * i / 200.0 + 0.003);
    worst = std::max(worst,
                     std::fabs(back.log_density(xi) - m.log_density(xi)));
  }
  CHECK(worst < 1e-4);  // linear interpolation on the 512 grid
}

TEST_CASE("pushforward metrics serialize with their provenance") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 32);
  auto f = boundary_map_of(DiskIsometry::rotation(0.5));
  auto push = pushforward(s, f, MM::visual(s, DiskPoint::origin()));
  auto j = metric_json(s, push, grid);
  CHECK(j["provenance"] == "pushforward");
}
