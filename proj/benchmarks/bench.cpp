#include <benchmark/benchmark.h>

#include "ccx/circumcenter.hpp"
#include "ccx/flow.hpp"
#include "ccx/moebius_metric.hpp"
#include "ccx/sampling.hpp"

using namespace ccx;

static void BM_DiskDistance(benchmark::State& state) {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.3, 0.4), y = DiskPoint::polar(2.1, -1.2);
  for (auto _ : state) benchmark::DoNotOptimize(s.distance(x, y));
}
BENCHMARK(BM_DiskDistance);

static void BM_Busemann(benchmark::State& state) {
  DiskSpace s(1.0);
  DiskPoint x = DiskPoint::polar(1.3, 0.4), y = DiskPoint::polar(2.1, -1.2);
  DiskBoundary xi(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(s.busemann(x, y, xi));
}
BENCHMARK(BM_Busemann);

static void BM_UkEval(benchmark::State& state) {
  DiskSpace s(1.0);
  auto fan = s.direction_fan(DiskPoint::polar(0.8, 0.3),
                             static_cast<int>(state.range(0)));
  DiskPoint z = DiskPoint::polar(1.7, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(u_k_eval(s, fan, z));
}
BENCHMARK(BM_UkEval)->Arg(32)->Arg(128);

static void BM_AsymptoticCenter(benchmark::State& state) {
  DiskSpace s(1.0);
  Rng rng = make_rng(11, 0);
  auto f = boundary_map_of(DiskIsometry::translation_to(DiskPoint::polar(1.0, 0.4)));
  auto fan = conjugate_fan(s, f, DiskPoint::polar(0.9, 1.1),
                           static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(asymptotic_circumcenter(s, fan).point.r);
}
BENCHMARK(BM_AsymptoticCenter)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_MetricSpaceDistance(benchmark::State& state) {
  DiskSpace s(1.0);
  auto grid = make_grid(s, static_cast<int>(state.range(0)));
  auto a = MoebiusMetric<DiskSpace>::visual(s, DiskPoint::polar(1.2, 0.3));
  auto b = MoebiusMetric<DiskSpace>::visual(s, DiskPoint::polar(0.5, -0.9));
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_space_distance(a, b, grid));
}
BENCHMARK(BM_MetricSpaceDistance)->Arg(256);

BENCHMARK_MAIN();
