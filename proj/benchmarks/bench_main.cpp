#include <benchmark/benchmark.h>

#include "rlab/bit_matrix.hpp"
#include "rlab/cuts.hpp"
#include "rlab/rankwidth.hpp"
#include "rlab/rng.hpp"
#include "rlab/tangle.hpp"

using namespace rlab;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(seed_key(1));
  const BitMatrix m = BitMatrix::random(n, n, rng, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_CutrankMask(benchmark::State& state) {
  const Graph g = gen_gnp(64, 0.5, 2);
  CounterRng rng(seed_key(2));
  for (auto _ : state) benchmark::DoNotOptimize(cutrank_mask(g, rng.next()));
}
BENCHMARK(BM_CutrankMask);

static void BM_MinBal(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_bal_cutrank(g).value);
}
BENCHMARK(BM_MinBal)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_RankwidthExact(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rankwidth_exact(g).value);
}
BENCHMARK(BM_RankwidthExact)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_MaxMinBal(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(max_min_bal_cutrank_over_induced(g).value);
}
BENCHMARK(BM_MaxMinBal)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_FindTangle(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.5, 6);
  const std::size_t w = rankwidth_exact(g).value;
  for (auto _ : state) benchmark::DoNotOptimize(find_tangle(g, w).tangle.has_value());
}
BENCHMARK(BM_FindTangle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
