#include <benchmark/benchmark.h>

#include "hyplobe/oracle.hpp"
#include "hyplobe/polygon.hpp"
#include "hyplobe/sampling.hpp"
#include "hyplobe/triangle.hpp"

namespace {

using namespace hyplobe;

void BM_HypDistance(benchmark::State& state) {
  Rng rng(1);
  const DiskPoint p = random_disk_point(rng, 3.0);
  const DiskPoint q = random_disk_point(rng, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp_distance(p, q));
  }
}
BENCHMARK(BM_HypDistance);

void BM_SolveSas(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_sas(1.3, 0.7, 1.1));
  }
}
BENCHMARK(BM_SolveSas);

void BM_BuildFigure1(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_figure1(1.3, 0.7, 1.1));
  }
}
BENCHMARK(BM_BuildFigure1);

void BM_OptimalAlpha(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_alpha(1.3, 0.7));
  }
}
BENCHMARK(BM_OptimalAlpha);

void BM_GridSearch(benchmark::State& state) {
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::grid_search_max_area(1.3, 0.7, samples));
  }
}
BENCHMARK(BM_GridSearch)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_SteinerOctagon(benchmark::State& state) {
  Rng rng(42);
  const HyperbolicPolygon start = random_steiner_polygon(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(steiner_optimize(start, 1e-8, 10000));
  }
}
BENCHMARK(BM_SteinerOctagon)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FitCircumcircle(benchmark::State& state) {
  const HyperbolicPolygon poly = regular_polygon_vertices({12, 1.0}).transformed(DiskIsometry(DiskPoint(0.2, 0.1), 0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_circumcircle(poly));
  }
}
BENCHMARK(BM_FitCircumcircle)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
