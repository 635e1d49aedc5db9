#include <benchmark/benchmark.h>

#include "bellsim/quantum.hpp"

using namespace bellsim;

static void BM_CorrelationSimulated(benchmark::State& state) {
  const Hamiltonian h(0.0, 1.0);
  double m = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_simulated(h, m, m + 0.7));
    m += 1e-3;
  }
}
BENCHMARK(BM_CorrelationSimulated);

static void BM_ChshValue(benchmark::State& state) {
  const Hamiltonian h(0.0, 1.0);
  double t0 = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chsh_value(h, optimal_settings(h, t0)));
    t0 += 1e-3;
  }
}
BENCHMARK(BM_ChshValue);

static void BM_ChshOperator(benchmark::State& state) {
  const Hamiltonian h(0.0, 1.0);
  const TimeSettings s = optimal_settings(h, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chsh_operator(h, s));
  }
}
BENCHMARK(BM_ChshOperator);
