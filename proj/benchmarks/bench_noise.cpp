#include <benchmark/benchmark.h>

#include <numbers>

#include "dotcavity/noise.hpp"
#include "dotcavity/threelevel.hpp"

using namespace dotcavity;

static void BM_LindbladEvolve(benchmark::State& state) {
  const SpaceLayout layout = noise_layout(static_cast<int>(state.range(0)));
  const PulseSpec pulse{PulseKind::RedSideband, "j", std::numbers::pi, 0.2, 0.0};
  const OperatorM h{layout, -0.01 * pulse_generator(layout, pulse).entries};
  const NoiseChannels channels{1e-5, 5e-6, 5e-6, 1e-6};
  const DensityOp rho0 = DensityOp::pure(Ket::basis_state(layout, {kLevelE, kLevelV, 0}));
  for (auto _ : state) {
    auto rho = lindblad_evolve(h, channels, rho0, 50.0, 0.5);
    benchmark::DoNotOptimize(rho.entries.data());
  }
}
BENCHMARK(BM_LindbladEvolve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CnotFidelityUnderNoise(benchmark::State& state) {
  const auto plan = timed_cnot_plan("j", "k", 0.3, 0.1, 0.01);
  const NoiseChannels intra{1e-3, 5e-4, 5e-4, 0.0};
  for (auto _ : state) {
    const double f = cnot_fidelity_under_noise(1e-2, intra, plan);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_CnotFidelityUnderNoise)->Unit(benchmark::kMillisecond);
