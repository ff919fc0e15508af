#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "safeset/component_poly.hpp"
#include "safeset/fast_solvers.hpp"

using namespace safeset;

namespace {

std::vector<Rational> random_weights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) w.emplace_back(static_cast<long>(1 + rng() % 1000));
  return w;
}

}  // namespace

static void BM_CycleScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Rational> w = random_weights(n, 1);
  for (auto _ : state) {
    CycleSolution sol = cycle_safe_number(w);
    benchmark::DoNotOptimize(sol.value);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CycleScan)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

static void BM_PathConnectedScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Rational> w = random_weights(n, 2);
  for (auto _ : state) {
    PathSolution sol = path_connected_safe_number(w);
    benchmark::DoNotOptimize(sol.value);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PathConnectedScan)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity(benchmark::oN);

static void BM_SafeNumberBruteCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  WeightedGraph cycle(cycle_graph(n), random_weights(n, 3));
  for (auto _ : state) {
    SafeSetSolution sol = safe_number(cycle);
    benchmark::DoNotOptimize(sol.optimum);
  }
}
BENCHMARK(BM_SafeNumberBruteCycle)->DenseRange(8, 16, 2);

static void BM_CoefficientTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = cycle_graph(n);
  for (auto _ : state) {
    CoefficientTable t = coefficient_table(g);
    benchmark::DoNotOptimize(t.at(1, 1));
  }
}
BENCHMARK(BM_CoefficientTable)->DenseRange(10, 18, 2);

static void BM_CorpusCrosscheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CorpusReport rep = corpus_crosscheck(n, 0, 1);
    benchmark::DoNotOptimize(rep.connected_graphs);
  }
}
BENCHMARK(BM_CorpusCrosscheck)->DenseRange(5, 6);

BENCHMARK_MAIN();
