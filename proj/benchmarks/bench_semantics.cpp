#include <benchmark/benchmark.h>

#include <random>

#include "afrob/afrob.hpp"

namespace {

afrob::Framework sample(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return afrob::random_framework(n, rng);
}

void BM_Extensions(benchmark::State& state) {
  const auto sigma = static_cast<afrob::Semantics>(state.range(0));
  const auto g = sample(static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(afrob::extensions(g, sigma));
  state.SetLabel(std::string(afrob::to_string(sigma)));
}

void BM_CompleteLabellings(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(afrob::complete_labellings(g));
}

void BM_OddWalkTable(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(afrob::OddWalkTable(g));
}

}  // namespace

BENCHMARK(BM_Extensions)->ArgsProduct({{0, 1, 2, 3, 4, 5, 6}, {4, 6, 8}});
BENCHMARK(BM_CompleteLabellings)->DenseRange(4, 8, 2);
BENCHMARK(BM_OddWalkTable)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
