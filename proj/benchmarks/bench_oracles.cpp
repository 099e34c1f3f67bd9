#include <benchmark/benchmark.h>

#include "eincausal/duality.hpp"
#include "eincausal/maximality.hpp"
#include "eincausal/rng.hpp"

using namespace eincausal;

namespace {

AchronalSet bench_set(std::shared_ptr<const SphereGrid> grid) {
  Rng rng(11);
  std::vector<int> nodes;
  while (nodes.size() < 6) {
    const int v = rng.uniform_int(0, grid->size() - 1);
    bool fresh = true;
    for (int u : nodes) fresh = fresh && u != v;
    if (fresh) nodes.push_back(v);
  }
  std::vector<double> raw(nodes.size());
  for (double& v : raw) v = rng.uniform(-1.0, 1.0);
  std::vector<Site> sites;
  for (size_t i = 0; i < nodes.size(); ++i) {
    double projected = raw[i];
    for (size_t j = 0; j < nodes.size(); ++j) {
      projected = std::min(
          projected, raw[j] + geodesic_distance(grid->node(nodes[i]),
                                                grid->node(nodes[j])));
    }
    sites.push_back({nodes[i], 0.9 * projected});
  }
  return AchronalSet(std::move(grid), std::move(sites));
}

}  // namespace

static void BM_DualByFormula(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::icosphere(3)));
  const AchronalSet set = bench_set(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_by_formula(set));
  }
}
BENCHMARK(BM_DualByFormula);

static void BM_DualByDefinition(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::circle(256)));
  const AchronalSet set = bench_set(grid);
  const double step = grid->resolution();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_by_definition(set, step));
  }
}
BENCHMARK(BM_DualByDefinition);

static void BM_Maximalize(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::icosphere(3)));
  const CausalDomain dual = dual_by_formula(bench_set(grid));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximalize(dual));
  }
}
BENCHMARK(BM_Maximalize);

static void BM_ConvexityOracle(benchmark::State& state) {
  auto grid = std::make_shared<const SphereGrid>(
      SphereGrid::build(GridSpec::circle(128)));
  const CausalDomain dual = dual_by_formula(bench_set(grid));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        causal_convexity_oracle(dual, static_cast<int>(state.range(0)), 5));
  }
}
BENCHMARK(BM_ConvexityOracle)->Arg(16)->Arg(64);
