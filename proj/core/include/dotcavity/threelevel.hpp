#pragma once

#include <string>
#include <vector>

#include "dotcavity/qspace.hpp"

namespace dotcavity {

/// Digits of a 3-level dot slot, ordered (|v>, |~e>, |e>).
inline constexpr int kLevelV = 0;
inline constexpr int kLevelETilde = 1;
inline constexpr int kLevelE = 2;

/// Rotating-frame parameters of the laser + cavity driven 3-level dot.
/// The frame makes the two-photon transition |v,1> <-> |e,0> exactly
/// resonant, so only the one-photon detuning appears.
struct ThreeLevelParams {
  double omega2_mev = 0.0;   // laser coupling |v> <-> |~e>
  double omegac_mev = 0.0;   // cavity coupling |~e> <-> |e>
  double detuning_mev = 0.0; // laser offset from the |v> -> |~e> transition
  double phi = 0.0;          // laser phase
  int fock_cutoff = 2;
};

SpaceLayout three_level_layout(int fock_cutoff);

/// H = -delta |~e><~e| + Omega2 (|~e><v| e^{i phi} + h.c.)
///       + Omegac (|e><~e| a + h.c.), in meV.
OperatorM build_rwa_hamiltonian(const ThreeLevelParams& p, const SpaceLayout& layout);

/// Omega2 * Omegac / delta. Zero detuning is an input error.
double effective_rabi(const ThreeLevelParams& p);

struct Trajectory {
  std::vector<double> times_ps;
  std::vector<Ket> states;
  std::vector<double> populations_etilde;
};

/// Samples steps+1 states at uniform intervals using the exact one-step
/// propagator exp(-i H dt / hbar); norm is preserved to 1e-9 end to end.
Trajectory propagate(const OperatorM& hamiltonian, const Ket& initial,
                     double duration_ps, int steps);

struct EliminationReport {
  double max_etilde_population = 0.0;
  double omega_fit_mev = 0.0;  // oscillation frequency of the |e,0> population
  double omega_eff_mev = 0.0;
  double rel_deviation = 0.0;  // |omega_fit - omega_eff| / omega_eff
};

/// Propagates |v,1> under the full model for one effective half-period and
/// compares the observed transfer against the second-order prediction.
/// Requires the perturbative regime Omega2, Omegac <= detuning/5.
EliminationReport validate_elimination(const ThreeLevelParams& p);

/// CSV rows (time_ps, pop_v, pop_etilde, pop_e, photon_mean) with header.
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace dotcavity
