#include <benchmark/benchmark.h>

#include "dotcavity/gates.hpp"
#include "dotcavity/qspace.hpp"

using namespace dotcavity;

static void BM_RedSideband(benchmark::State& state) {
  const SpaceLayout layout = two_qubit_cavity_layout(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto u = red_sideband(layout, "j", 3.14, 0.3);
    benchmark::DoNotOptimize(u.entries.data());
  }
}
BENCHMARK(BM_RedSideband)->Arg(3)->Arg(8)->Arg(20);

static void BM_CnotBuild(benchmark::State& state) {
  const SpaceLayout layout = two_qubit_cavity_layout(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto u = cnot(layout, "j", "k", 0.7);
    benchmark::DoNotOptimize(u.entries.data());
  }
}
BENCHMARK(BM_CnotBuild)->Arg(3)->Arg(8);

static void BM_VerifyProtocol(benchmark::State& state) {
  const SpaceLayout layout = two_qubit_cavity_layout(3);
  for (auto _ : state) {
    auto report = verify_protocol(layout);
    benchmark::DoNotOptimize(report.checks.data());
  }
}
BENCHMARK(BM_VerifyProtocol);

static void BM_ExpmHermitian(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  SpaceLayout layout({{"a", dim}});
  Matrix g = Matrix::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; ++i) {
    g(i, i + 1) = Complex{0.4, 0.1 * i};
    g(i + 1, i) = std::conj(g(i, i + 1));
    g(i, i) = 0.2 * i;
  }
  const OperatorM generator{layout, g};
  for (auto _ : state) {
    auto u = expm_hermitian(generator, 0.9);
    benchmark::DoNotOptimize(u.entries.data());
  }
}
BENCHMARK(BM_ExpmHermitian)->Arg(12)->Arg(36)->Arg(108);
