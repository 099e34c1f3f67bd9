#include <benchmark/benchmark.h>

#include "eincausal/rng.hpp"
#include "eincausal/sphere.hpp"

using namespace eincausal;

static void BM_GeodesicDistance(benchmark::State& state) {
  Rng rng(1);
  const UnitPoint a({0.6, 0.8, 0.0});
  const UnitPoint b({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), 0.7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_distance(a, b));
  }
}
BENCHMARK(BM_GeodesicDistance);

static void BM_BuildIcosphere(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SphereGrid::build(GridSpec::icosphere(level)));
  }
}
BENCHMARK(BM_BuildIcosphere)->DenseRange(0, 3);

static void BM_MultiSourceDijkstra(benchmark::State& state) {
  const SphereGrid grid =
      SphereGrid::build(GridSpec::icosphere(static_cast<int>(state.range(0))));
  const int sources[] = {0, 5, 9};
  const double offsets[] = {0.0, 0.1, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_distance(grid, sources, offsets));
  }
  state.SetComplexityN(grid.size());
}
BENCHMARK(BM_MultiSourceDijkstra)->DenseRange(1, 4)->Complexity();

BENCHMARK_MAIN();
