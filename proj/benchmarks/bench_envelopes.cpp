#include <benchmark/benchmark.h>

#include "eincausal/fields.hpp"
#include "eincausal/rng.hpp"

using namespace eincausal;

namespace {

Region full_region(std::shared_ptr<const SphereGrid> grid) {
  std::vector<int> all(static_cast<size_t>(grid->size()));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Region(std::move(grid), std::move(all));
}

std::vector<Site> random_sites(const SphereGrid& grid, int count,
                               uint64_t seed) {
  Rng rng(seed);
  std::vector<Site> sites;
  sites.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    sites.push_back({rng.uniform_int(0, grid.size() - 1),
                     rng.uniform(-1.0, 1.0)});
  }
  return sites;
}

}  // namespace

static void BM_ExactEnvelope(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::icosphere(static_cast<int>(state.range(0)))));
  const Region region = full_region(grid);
  const auto sites = random_sites(*grid, 12, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_envelope(sites, region, EnvelopeMetric::exact));
  }
  state.SetComplexityN(grid->size());
}
BENCHMARK(BM_ExactEnvelope)->DenseRange(1, 4)->Complexity();

static void BM_GraphEnvelope(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::icosphere(static_cast<int>(state.range(0)))));
  const Region region = full_region(grid);
  const auto sites = random_sites(*grid, 12, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_envelope(sites, region, EnvelopeMetric::graph));
  }
  state.SetComplexityN(grid->size());
}
BENCHMARK(BM_GraphEnvelope)->DenseRange(1, 4)->Complexity();

static void BM_LipschitzEdgewise(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::icosphere(3)));
  const Region region = full_region(grid);
  const auto sites = random_sites(*grid, 12, 7);
  const ScalarField field = lower_envelope(sites, region);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lipschitz(field, LipschitzMode::edgewise));
  }
}
BENCHMARK(BM_LipschitzEdgewise);
