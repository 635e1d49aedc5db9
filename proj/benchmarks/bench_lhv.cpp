#include <benchmark/benchmark.h>

#include "bellsim/lhv.hpp"
#include "bellsim/relativity.hpp"

using namespace bellsim;

static void BM_MaxOverFullStrategies(benchmark::State& state) {
  const lhv::SettingLabels labels = lhv::SettingLabels::abstract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhv::max_over_full_strategies(labels));
  }
}
BENCHMARK(BM_MaxOverFullStrategies)->Unit(benchmark::kMicrosecond);

static void BM_AchievableOrderings(benchmark::State& state) {
  const std::array<rel::Event, 3> events{rel::Event(0.5, 5.0), rel::Event(0.0, 0.0),
                                         rel::Event(1.0, 0.2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rel::achievable_orderings(events));
  }
}
BENCHMARK(BM_AchievableOrderings);
