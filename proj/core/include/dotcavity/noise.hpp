#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dotcavity/gates.hpp"
#include "dotcavity/qspace.hpp"

namespace dotcavity {

/// Relaxation channel rates in 1/ps. The three dot channels are radiative
/// |e> -> |v>, radiative |e> -> |~e> and phonon |e> -> |~e>; kappa_cavity is
/// cavity photon loss.
struct NoiseChannels {
  double rate_e_to_v = 0.0;
  double rate_e_to_etilde_rad = 0.0;
  double rate_e_to_etilde_ph = 0.0;
  double kappa_cavity = 0.0;
};

/// Dot channels multiplied by gamma; cavity loss is not a dot property and
/// passes through unchanged.
NoiseChannels scaled_by(const NoiseChannels& channels, double gamma);

/// Two 3-level dots (v, ~e, e) plus a cavity; default cutoff 2 is exact for
/// the CNOT protocol, which never exceeds two photons.
SpaceLayout noise_layout(int fock_cutoff = 2);

/// Jump operators for the channels on the given layout: per dot slot
/// sqrt(G1)|v><e| and sqrt(G2+G3)|~e><e| (the two |e> -> |~e> channels share
/// a jump operator with additive rates), plus sqrt(kappa) a on the cavity.
/// 2-level dot slots host only the |e> -> |v> channel; nonzero |e> -> |~e>
/// rates on such a layout are an input error.
std::vector<Matrix> jump_operators(const SpaceLayout& layout, const NoiseChannels& channels);

/// Fixed-step RK4 integration of
///   drho/dt = -(i/hbar)[H, rho] + sum_L (L rho L^dag - 1/2 {L^dag L, rho}).
/// Hermiticity is restored by symmetrization each step. The stability guard
/// dt * (max rate + ||H||/hbar) <= 0.05 rejects too-coarse steps with a
/// suggested dt; the trace is verified to min(1e-8 * steps, 1e-6).
DensityOp lindblad_evolve(const OperatorM& hamiltonian, const NoiseChannels& channels,
                          const DensityOp& rho0, double duration_ps, double dt_ps);

struct TimedPulse {
  PulseSpec spec;
  double duration_ps = 0.0;  // 0 = instantaneous (frame phase update)
};

/// The CNOT pulse sequence with durations T = theta * hbar / (2 Omega),
/// red-sideband legs clocked by omega_eff and carrier legs by omega1.
std::vector<TimedPulse> timed_cnot_plan(std::string_view control, std::string_view target,
                                        double phi, double omega1_mev, double omega_eff_mev);

/// Runs the timed plan with Lindblad noise (dot channels scaled by gamma),
/// averaging output fidelity against the ideal CNOT action over the four
/// zero-photon computational inputs plus their uniform superposition.
double cnot_fidelity_under_noise(double gamma, const NoiseChannels& intra_channels,
                                 std::span<const TimedPulse> plan, int fock_cutoff = 2);

/// CSV (gamma,fidelity) with header.
std::string fidelity_csv(std::span<const std::pair<double, double>> rows);

}  // namespace dotcavity
