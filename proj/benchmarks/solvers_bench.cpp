#include <benchmark/benchmark.h>

#include "arcfix/generators.hpp"
#include "arcfix/pca.hpp"
#include "arcfix/phcag.hpp"

using namespace arcfix;

namespace {

void BM_PhcagVd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  auto p = planted_phcag(n, k, 1);
  long long nodes = 0;
  for (auto _ : state) {
    auto r = phcag_vd(p.graph, k);
    if (!r.answer) state.SkipWithError("planted instance rejected");
    nodes = r.stats.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_PhcagVd)->Args({50, 4})->Args({100, 6})->Args({200, 8})->Unit(benchmark::kMillisecond);

void BM_PhcagEd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  auto p = planted_phcag(n, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(phcag_ed(p.graph, k));
}
BENCHMARK(BM_PhcagEd)->Args({40, 2})->Unit(benchmark::kMillisecond);

void BM_PhcagCompletion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  auto p = planted_completion(n, k, 3);
  for (auto _ : state) benchmark::DoNotOptimize(phcag_completion(p.graph, k));
}
BENCHMARK(BM_PhcagCompletion)->Args({30, 2})->Args({60, 3})->Unit(benchmark::kMillisecond);

void BM_PcaVd(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
  auto p = planted_pca(n, k, 1);
  for (auto _ : state) {
    auto r = pca_vd(p.graph, k);
    if (!r.answer) state.SkipWithError("planted instance rejected");
  }
}
BENCHMARK(BM_PcaVd)->Args({30, 3})->Args({60, 5})->Unit(benchmark::kMillisecond);

void BM_Approx(benchmark::State& state) {
  auto p = planted_pca(static_cast<int>(state.range(0)), 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phcag_approx6(p.graph));
    benchmark::DoNotOptimize(pca_approx9(p.graph));
  }
}
BENCHMARK(BM_Approx)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
