#include <benchmark/benchmark.h>

#include "parthom/chain_complex.hpp"
#include "parthom/chains.hpp"
#include "parthom/homology.hpp"
#include "parthom/reps.hpp"
#include "parthom/smith.hpp"
#include "parthom/symfunc.hpp"

using namespace parthom;

static void BM_OrderComplex(benchmark::State& state) {
  const PosetView view(static_cast<int>(state.range(0)), ViewSpec::full());
  for (auto _ : state) benchmark::DoNotOptimize(ChainComplex::order_complex(view));
}
BENCHMARK(BM_OrderComplex)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SmithTopBoundary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cc = ChainComplex::order_complex(PosetView(n, ViewSpec::full()));
  const auto& d = cc.boundary(cc.top_dimension());
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(d));
}
BENCHMARK(BM_SmithTopBoundary)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_Homology(benchmark::State& state) {
  const PosetView view(7, ViewSpec::parse("le:k=2"));
  for (auto _ : state) benchmark::DoNotOptimize(homology(view));
}
BENCHMARK(BM_Homology)->Unit(benchmark::kMillisecond);

static void BM_Plethysm(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plethysm(complete(2), complete(b), 2 * b));
}
BENCHMARK(BM_Plethysm)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_PlethysmWithH(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plethysm_with_H(complete(3), n));
}
BENCHMARK(BM_PlethysmWithH)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_FixedChainCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PosetView view(n, ViewSpec::full());
  const auto types = partitions_of(n);
  for (auto _ : state) {
    for (const auto& mu : types) benchmark::DoNotOptimize(fixed_chain_count(view, mu));
  }
}
BENCHMARK(BM_FixedChainCount)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_AlphaChains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = RankSet::interval(1, n - 2);
  for (auto _ : state) {
    clear_module_caches();
    benchmark::DoNotOptimize(alpha(n, s, AlphaMethod::chains));
  }
}
BENCHMARK(BM_AlphaChains)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_BetaRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = RankSet::interval(1, n - 2);
  for (auto _ : state) {
    clear_module_caches();
    benchmark::DoNotOptimize(beta(n, s, BetaMethod::recurrence));
  }
}
BENCHMARK(BM_BetaRecurrence)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
