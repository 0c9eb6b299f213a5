#include <benchmark/benchmark.h>

#include "qpert/binomial.hpp"
#include "qpert/bound_state_models.hpp"
#include "qpert/perturbation_series.hpp"

namespace {

void BM_PerturbedEnergy(benchmark::State& state) {
  const qpert::PerturbationSpec spec(-1.0, 2.0, 0.45);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpert::perturbed_energy(spec, order));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PerturbedEnergy)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_Recurrence(benchmark::State& state) {
  const qpert::PerturbationSpec spec(4.0, 2.0, 1.5);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    qpert::CorrectionRecurrence rec(spec);
    benchmark::DoNotOptimize(rec.coefficient(order));
  }
}
BENCHMARK(BM_Recurrence)->Arg(20)->Arg(40)->Arg(80);

void BM_ClosedCoefficient(benchmark::State& state) {
  const qpert::PerturbationSpec spec(4.0, 2.0, 1.5);
  for (auto _ : state) {
    for (int s = 2; s <= 40; s += 2) {
      benchmark::DoNotOptimize(qpert::correction_coefficient_closed(spec, s));
    }
  }
}
BENCHMARK(BM_ClosedCoefficient);

void BM_SeriesWeight(benchmark::State& state) {
  for (auto _ : state) {
    for (int t = 1; t <= 60; ++t) {
      benchmark::DoNotOptimize(qpert::series_weight(t));
    }
  }
}
BENCHMARK(BM_SeriesWeight);

void BM_SigmaCurve(benchmark::State& state) {
  const double alphas[] = {0.0, 0.02, 0.04, 0.06, 0.08, 0.1, 0.125};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpert::sigma_curve(qpert::ModelKind::hydrogen, 1, alphas, 30));
  }
}
BENCHMARK(BM_SigmaCurve);

}  // namespace

BENCHMARK_MAIN();
