#include <benchmark/benchmark.h>

#include <random>

#include "afrob/afrob.hpp"

namespace {

void BM_Robustness(benchmark::State& state) {
  const auto sigma = state.range(0) == 0 ? afrob::Semantics::cf : afrob::Semantics::adm;
  afrob::RobustnessOptions o;
  o.strategy = state.range(1) == 0 ? afrob::Strategy::exhaustive : afrob::Strategy::greedy;
  std::mt19937_64 rng(5);
  std::vector<afrob::Framework> suite;
  for (int i = 0; i < 20; ++i) suite.push_back(afrob::random_framework(4, rng));
  std::size_t states = 0;
  for (auto _ : state) {
    for (const auto& g : suite) states += afrob::robustness_degree(g, sigma, o).explored_states;
  }
  state.counters["states/iter"] =
      benchmark::Counter(static_cast<double>(states), benchmark::Counter::kAvgIterations);
}

}  // namespace

BENCHMARK(BM_Robustness)->ArgsProduct({{0, 1}, {0, 1}});

BENCHMARK_MAIN();
