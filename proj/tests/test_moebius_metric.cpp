#include <cmath>

#include "ccx/moebius_metric.hpp"
#include "doctest.h"

using namespace ccx;
using MM = MoebiusMetric<DiskSpace>;

TEST_CASE("embedding distance between origin and a diameter point is log 3") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 512);
  MM mo = MM::visual(s, DiskPoint::origin());
  MM mx = MM::visual(s, DiskPoint::cartesian(0.5, 0.0));
  CHECK(metric_space_distance(mo, mx, grid) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-6));
}

TEST_CASE("derivative of a visual pair is the exponentiated busemann") {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.1, 0.2), y = DiskPoint::polar(0.6, -2.0);
  DiskBoundary xi(1.4);
  CHECK(metric_derivative(MM::visual(s, y), MM::visual(s, x), xi) ==
        doctest::Approx(std::exp(s.busemann(x, y, xi))).epsilon(1e-12));
}

TEST_CASE("max and min log derivatives multiply to one") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 256);
  auto rep = maxmin_report(MM::visual(s, DiskPoint::polar(1.5, 0.8)),
                           MM::visual(s, DiskPoint::polar(0.4, 2.1)), grid);
  CHECK(rep.product_residual < 1e-8);
  CHECK(rep.log_max > 0);
  CHECK(rep.log_min < 0);
}

TEST_CASE("visual metrics validate; a large density does not") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 128);
  CHECK(validate_metric(MM::visual(s, DiskPoint::polar(1.0, 0.5)), grid).pass);
  MM bad = MM::synthetic(
      s, [](const DiskBoundary& xi) { return 5 * std::cos(xi.angle); }, "bad");
  CHECK_FALSE(validate_metric(bad, grid).pass);
}

TEST_CASE("harmonic densities keep diameter one after renormalization") {
  DiskSpace s(1.0);
  auto grid = make_grid(s, 256);
  MM m = synthetic_harmonic_metric(s, {0.07, 0.02}, {0.3, 1.9});
  auto v = validate_metric(m, grid);
  CHECK(validate_metric(m.shifted(v.suggested_shift), grid).pass);
}

TEST_CASE("pushforward under a rotation fixes the origin visual metric") {
  DiskSpace s(1.0);
  auto f = boundary_map_of(DiskIsometry::rotation(0.9));
  MM mo = MM::visual(s, DiskPoint::origin());
  MM push = pushforward(s, f, mo);
  CHECK(push.validated());
  CHECK(push.provenance() == MM::Provenance::kPushforward);
  for (double a : {0.0, 1.1, 3.0, 5.2})
    CHECK(push.log_density(DiskBoundary(a)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pushforward refuses unvalidated maps") {
  DiskSpace s(1.0);
  auto bad = corrupt_map(boundary_map_of(DiskIsometry::rotation(0.3)));
  CHECK_THROWS_AS(pushforward(s, bad, MM::visual(s, DiskPoint::origin())),
                  std::invalid_argument);
}
