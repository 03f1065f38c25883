#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "dotcavity/budget.hpp"
#include "dotcavity/threelevel.hpp"

using namespace dotcavity;

static void BM_Sweep(benchmark::State& state) {
  BudgetParams fixed = paper_preset();
  fixed.tau_d_intra_ps = 1000.0;
  const long n = state.range(0);
  std::vector<double> ts, ds;
  for (long i = 0; i < n; ++i) {
    ts.push_back(1e-3 * std::pow(10.0, 2.0 * i / std::max<long>(1, n - 1)));
    ds.push_back(1.0 * std::pow(10.0, 1.3 * i / std::max<long>(1, n - 1)));
  }
  for (auto _ : state) {
    auto rows = sweep(ts, ds, fixed);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(40);

static void BM_ValidateElimination(benchmark::State& state) {
  const ThreeLevelParams p{0.1, 0.1, 1.0, 0.0, 2};
  for (auto _ : state) {
    auto report = validate_elimination(p);
    benchmark::DoNotOptimize(report.rel_deviation);
  }
}
BENCHMARK(BM_ValidateElimination)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
