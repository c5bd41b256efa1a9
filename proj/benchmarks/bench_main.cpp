#include <benchmark/benchmark.h>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/characters.hpp"
#include "stabcoh/macdonald.hpp"
#include "stabcoh/oracle.hpp"
#include "stabcoh/stable.hpp"

using namespace stabcoh;

static void BM_CharacterTable(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CharacterTable table(s);
    benchmark::DoNotOptimize(table.value(0, 0));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(9)->Arg(10);

static void BM_InvariantSeriesMolien(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LaurentWindow w = invariant_series(Variant::A, s, 20);
    benchmark::DoNotOptimize(w.coeff(20));
  }
}
BENCHMARK(BM_InvariantSeriesMolien)->Arg(5)->Arg(6)->Arg(7);

static void BM_InvariantSeriesDirect(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LaurentWindow w = invariant_series_direct(Variant::A, s, 16);
    benchmark::DoNotOptimize(w.coeff(16));
  }
}
BENCHMARK(BM_InvariantSeriesDirect)->Arg(4)->Arg(5);

static void BM_MultiplicitySeries(benchmark::State& state) {
  const NumericalPartition lambda({2, 1});
  for (auto _ : state) {
    LaurentWindow w = b_lambda_series(lambda, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(w.max_deg());
  }
}
BENCHMARK(BM_MultiplicitySeries)->Arg(20)->Arg(30);

static void BM_SymProductBetti(benchmark::State& state) {
  for (auto _ : state) {
    BettiTable t = sym_product_betti(3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.betti.back());
  }
}
BENCHMARK(BM_SymProductBetti)->Arg(3)->Arg(4)->Arg(5);

static void BM_OracleCrossValidate(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CrossValidateReport r = cross_validate(s, -s, 8 - s);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_OracleCrossValidate)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
