#include <benchmark/benchmark.h>

#include <random>

#include "afrob/afrob.hpp"

namespace {

// classify every candidate attack of one framework
void BM_ClassifySweep(benchmark::State& state) {
  const auto sigma = state.range(0) == 0 ? afrob::Semantics::cf : afrob::Semantics::adm;
  std::mt19937_64 rng(11);
  const auto g = afrob::random_framework(static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) {
    const afrob::AttackClassifier c(g, sigma);
    std::size_t invariant = 0;
    for (afrob::Edge e : c.candidates()) invariant += c.is_invariant(e) ? 1 : 0;
    benchmark::DoNotOptimize(invariant);
  }
}

void BM_OracleSweep(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto g = afrob::random_framework(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(afrob::oracle_invariant_steps(g, afrob::Semantics::adm));
  }
}

void BM_Audit(benchmark::State& state) {
  afrob::AuditOptions o;
  o.arguments = 3;
  o.semantics = afrob::Semantics::adm;
  o.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(afrob::exhaustive_audit(o));
}

}  // namespace

BENCHMARK(BM_ClassifySweep)->ArgsProduct({{0, 1}, {4, 6, 8}});
BENCHMARK(BM_OracleSweep)->DenseRange(4, 8, 2);
BENCHMARK(BM_Audit)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
