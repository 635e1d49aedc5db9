#include <benchmark/benchmark.h>

#include "bellsim/experiment.hpp"

using namespace bellsim;

static void BM_RunExperiment(benchmark::State& state) {
  const Hamiltonian h(0.0, 1.0);
  const TimeSettings s = optimal_settings(h, 0.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::run_experiment(h, s, n, 42));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_RunExperiment)->Unit(benchmark::kMicrosecond)->Range(1000, 100000);

static void BM_EstimateChsh(benchmark::State& state) {
  const Hamiltonian h(0.0, 1.0);
  const TimeSettings s = optimal_settings(h, 0.0);
  const auto records =
      mc::run_experiment(h, s, static_cast<std::uint64_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::estimate_chsh(records, s));
  }
}
BENCHMARK(BM_EstimateChsh)->Unit(benchmark::kMicrosecond)->Range(1000, 100000);
