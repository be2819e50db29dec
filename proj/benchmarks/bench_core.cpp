#include <benchmark/benchmark.h>

#include "orbitcert/analysis.hpp"
#include "orbitcert/tables.hpp"
#include "orbitcert/transvectant.hpp"

using namespace orbitcert;

namespace {

StratifiedVector gu_example() {
  StratifiedVector v;
  v.set(0, 3, BinaryForm::monomial(3, 0));
  v.set(1, 2, BinaryForm::monomial(2, 1));
  return v;
}

}  // namespace

static void BM_SolveEqStar(benchmark::State& state) {
  long s = state.range(0);
  for (auto _ : state) {
    auto sol = solve_eq_star(s, 8, 20);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveEqStar)->Arg(4)->Arg(8);

static void BM_TauTable(benchmark::State& state) {
  long p = state.range(0);
  for (auto _ : state) {
    CGMap t = tau(p, 8, p / 2);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TauTable)->Arg(2)->Arg(6);

static void BM_DecideGu(benchmark::State& state) {
  StratifiedVector v = gu_example();
  for (auto _ : state) {
    Certificate c = decide_gu(v, 1);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DecideGu);

static void BM_Oracle(benchmark::State& state) {
  StratifiedVector v = gu_example();
  ModuleSpec spec = v.induced_spec();
  ComponentMap comps = v.component_map();
  for (auto _ : state) {
    OracleResult res = sampled_stabilizer(spec, comps, 64);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Oracle);

static void BM_WeylDimSpin(benchmark::State& state) {
  SimpleType t{Family::D, 8};
  HighestWeight lam = HighestWeight::fundamental(8, 7, 4);
  for (auto _ : state) {
    Int d = weyl_dim(t, lam);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_WeylDimSpin);

static void BM_Table2Row(benchmark::State& state) {
  const auto& rows = builtin_tables().table2;
  for (auto _ : state) {
    for (const auto& row : rows)
      if (row.row == "2.1") {
        auto res = verify_table2(row, 3, 3);
        benchmark::DoNotOptimize(res);
      }
  }
}
BENCHMARK(BM_Table2Row);

BENCHMARK_MAIN();
