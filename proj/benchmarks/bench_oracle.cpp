#include <benchmark/benchmark.h>

#include "qpert/spectral_oracle.hpp"

namespace {

using qpert::ModelKind;

void BM_Embed(benchmark::State& state) {
  const auto H = qpert::discretize(ModelKind::well, qpert::default_grid(ModelKind::well, static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpert::embed(H, 0.3, {2.0, 0.0}));
  }
}
BENCHMARK(BM_Embed)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_MatchedLevel(benchmark::State& state) {
  const auto H =
      qpert::discretize(ModelKind::oscillator, qpert::default_grid(ModelKind::oscillator, static_cast<int>(state.range(0))));
  const auto B = qpert::embed(H, 0.25, {1.0, 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpert::matched_level(B, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatchedLevel)->Arg(100)->Arg(200)->Arg(400)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

void BM_OracleCompare(benchmark::State& state) {
  const auto grid = qpert::default_grid(ModelKind::well, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpert::oracle_compare(ModelKind::well, 2, 1.0, grid, 50));
  }
}
BENCHMARK(BM_OracleCompare)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
