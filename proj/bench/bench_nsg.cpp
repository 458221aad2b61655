// Closed forms against the DP oracle, and serial against OpenMP kernels.

#include <benchmark/benchmark.h>

#include "nsg/denumerant.hpp"
#include "nsg/verify.hpp"

using namespace nsg;

static void BM_OracleSinglePoint(benchmark::State& state) {
  const Submonoid m({7, 11});
  const auto x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_oracle(m, x));
}
BENCHMARK(BM_OracleSinglePoint)->Arg(1'000)->Arg(100'000);

static void BM_ClosedForm2(benchmark::State& state) {
  const TwoGeneratorFormula f(7, 11);
  const auto x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(f.count(x));
}
BENCHMARK(BM_ClosedForm2)->Arg(1'000)->Arg(100'000);

static void BM_Decompose3(benchmark::State& state) {
  const ThreeGeneratorSplit s(7, 11, 13);
  const auto x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(s.decompose(x));
}
BENCHMARK(BM_Decompose3)->Arg(1'000)->Arg(100'000);

static void BM_OracleThree(benchmark::State& state) {
  const Submonoid m({7, 11, 13});
  const auto x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_oracle(m, x));
}
BENCHMARK(BM_OracleThree)->Arg(1'000)->Arg(100'000);

template <Execution E>
static void BM_Table(benchmark::State& state) {
  const Submonoid m({3, 4, 5, 7});
  for (auto _ : state) {
    DenumerantTable t(m, state.range(0), E);
    benchmark::DoNotOptimize(t.at(state.range(0)));
  }
}
BENCHMARK(BM_Table<Execution::serial>)->Arg(20'000)->Arg(200'000);
BENCHMARK(BM_Table<Execution::parallel>)->Arg(20'000)->Arg(200'000);

template <Execution E>
static void BM_VerifySplit(benchmark::State& state) {
  verify::Limits l = verify::Limits::empty();
  l.triple_product_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_suite("s-split", l, E));
}
BENCHMARK(BM_VerifySplit<Execution::serial>)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySplit<Execution::parallel>)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
