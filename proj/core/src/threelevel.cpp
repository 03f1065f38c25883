#include "dotcavity/threelevel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "dotcavity/units.hpp"

namespace dotcavity {

SpaceLayout three_level_layout(int fock_cutoff) {
  if (fock_cutoff < 1) throw std::invalid_argument("fock cutoff must be >= 1");
  return SpaceLayout({{"dot", 3}, {"cav", fock_cutoff + 1}});
}

OperatorM build_rwa_hamiltonian(const ThreeLevelParams& p, const SpaceLayout& layout) {
  if (layout.slot_count() != 2 || layout.slot(0).radix != 3)
    throw std::invalid_argument("layout must be one 3-level dot plus a cavity");
  if (p.omega2_mev < 0.0 || p.omegac_mev < 0.0)
    throw std::invalid_argument("couplings must be >= 0");
  const std::string dot = layout.slot(0).label;
  const std::string cav = layout.cavity().label;

  Matrix dot_part = Matrix::Zero(3, 3);
  dot_part(kLevelETilde, kLevelETilde) = -p.detuning_mev;
  dot_part(kLevelETilde, kLevelV) = p.omega2_mev * std::polar(1.0, p.phi);
  dot_part(kLevelV, kLevelETilde) = p.omega2_mev * std::polar(1.0, -p.phi);

  const int nc = layout.cavity().radix;
  const Matrix a = annihilation_matrix(nc);
  Matrix exchange = Matrix::Zero(3 * nc, 3 * nc);
  for (int n1 = 0; n1 < nc; ++n1)
    for (int n2 = 0; n2 < nc; ++n2) {
      const Complex amp = a(n1, n2);
      if (amp == Complex{0.0, 0.0}) continue;
      exchange(kLevelE * nc + n1, kLevelETilde * nc + n2) += p.omegac_mev * amp;
      exchange(kLevelETilde * nc + n2, kLevelE * nc + n1) += p.omegac_mev * std::conj(amp);
    }

  Matrix h = embed(layout, dot_part, {dot}).entries +
             embed(layout, exchange, {dot, cav}).entries;
  return OperatorM{layout, std::move(h)};
}

double effective_rabi(const ThreeLevelParams& p) {
  if (p.detuning_mev == 0.0)
    throw std::invalid_argument("effective_rabi: detuning must be nonzero");
  return p.omega2_mev * p.omegac_mev / p.detuning_mev;
}

Trajectory propagate(const OperatorM& hamiltonian, const Ket& initial,
                     double duration_ps, int steps) {
  if (duration_ps <= 0.0) throw std::invalid_argument("duration must be > 0");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(hamiltonian.layout == initial.layout))
    throw std::invalid_argument("propagate: layouts differ");
  const double dt = duration_ps / steps;
  const OperatorM step = expm_hermitian(hamiltonian, -dt / kHbarMeVPs);

  Trajectory out;
  out.times_ps.reserve(static_cast<size_t>(steps) + 1);
  out.states.reserve(static_cast<size_t>(steps) + 1);
  out.populations_etilde.reserve(static_cast<size_t>(steps) + 1);
  const std::string dot = initial.layout.slot(0).label;
  Ket state = initial;
  for (int i = 0; i <= steps; ++i) {
    out.times_ps.push_back(dt * i);
    out.populations_etilde.push_back(
        initial.layout.slot(0).radix == 3 ? population(state, dot, kLevelETilde) : 0.0);
    out.states.push_back(state);
    if (i < steps) state = apply(step, state);
  }
  return out;
}

namespace {

// Least-squares fit of the |e,0> population to sin^2(Omega t / hbar):
// coarse grid over [lo, hi] then golden-section refinement.
double fit_sin2_frequency(const std::vector<double>& t, const std::vector<double>& pop,
                          double lo, double hi) {
  const auto objective = [&](double omega) {
    double s = 0.0;
    for (size_t i = 0; i < t.size(); ++i) {
      const double model = std::sin(omega * t[i] / kHbarMeVPs);
      const double r = pop[i] - model * model;
      s += r * r;
    }
    return s;
  };
  const int grid = 400;
  double best = lo, best_val = objective(lo);
  for (int i = 1; i <= grid; ++i) {
    const double omega = lo + (hi - lo) * i / grid;
    const double val = objective(omega);
    if (val < best_val) {
      best_val = val;
      best = omega;
    }
  }
  double a = std::max(lo, best - (hi - lo) / grid);
  double b = std::min(hi, best + (hi - lo) / grid);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  for (int it = 0; it < 120; ++it) {
    if (objective(c) < objective(d)) {
      b = d;
      d = c;
      c = b - gr * (b - a);
    } else {
      a = c;
      c = d;
      d = a + gr * (b - a);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

EliminationReport validate_elimination(const ThreeLevelParams& p) {
  if (p.detuning_mev <= 0.0)
    throw std::invalid_argument("validate_elimination: detuning must be > 0");
  if (p.omega2_mev > p.detuning_mev / 5.0 || p.omegac_mev > p.detuning_mev / 5.0)
    throw std::invalid_argument(
        "validate_elimination: couplings must satisfy Omega <= detuning/5 "
        "(perturbative regime)");
  if (p.fock_cutoff < 2)
    throw std::invalid_argument("validate_elimination: fock cutoff must be >= 2");

  const SpaceLayout layout = three_level_layout(p.fock_cutoff);
  const OperatorM h = build_rwa_hamiltonian(p, layout);
  const Ket start = Ket::basis_state(layout, {kLevelV, 1});

  const double omega_eff = effective_rabi(p);
  // Half-period of the effective two-level transfer; if the cavity leg is
  // off there is no transfer and a detuning-scale window is simulated.
  const double duration = omega_eff > 0.0
                              ? std::numbers::pi * kHbarMeVPs / (2.0 * omega_eff)
                              : 200.0 * kHbarMeVPs / p.detuning_mev;
  // At least 16 samples per detuning period to resolve the fast admixture.
  const int steps = std::max(
      2000, static_cast<int>(std::ceil(16.0 * duration * p.detuning_mev /
                                       (2.0 * std::numbers::pi * kHbarMeVPs))));
  const Trajectory traj = propagate(h, start, duration, steps);

  EliminationReport report;
  report.omega_eff_mev = omega_eff;
  for (double pe : traj.populations_etilde)
    report.max_etilde_population = std::max(report.max_etilde_population, pe);

  if (omega_eff > 0.0) {
    const int target = basis_index(layout, {kLevelE, 0});
    std::vector<double> pop_e0(traj.states.size());
    for (size_t i = 0; i < traj.states.size(); ++i)
      pop_e0[i] = std::norm(traj.states[i].amplitudes(target));
    report.omega_fit_mev =
        fit_sin2_frequency(traj.times_ps, pop_e0, 0.5 * omega_eff, 1.5 * omega_eff);
    report.rel_deviation = std::abs(report.omega_fit_mev - omega_eff) / omega_eff;
  }
  return report;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string out = "time_ps,pop_v,pop_etilde,pop_e,photon_mean\n";
  char buf[160];
  for (size_t i = 0; i < trajectory.states.size(); ++i) {
    const Ket& state = trajectory.states[i];
    const std::string dot = state.layout.slot(0).label;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  trajectory.times_ps[i], population(state, dot, kLevelV),
                  population(state, dot, kLevelETilde), population(state, dot, kLevelE),
                  mean_photon_number(state));
    out += buf;
  }
  return out;
}

}  // namespace dotcavity
