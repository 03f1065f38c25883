#include "dotcavity/noise.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dotcavity/threelevel.hpp"
#include "dotcavity/units.hpp"

namespace dotcavity {

namespace {

void validate_rates(const NoiseChannels& c) {
  if (c.rate_e_to_v < 0.0 || c.rate_e_to_etilde_rad < 0.0 ||
      c.rate_e_to_etilde_ph < 0.0 || c.kappa_cavity < 0.0)
    throw std::invalid_argument("channel rates must be >= 0");
}

double max_rate(const NoiseChannels& c) {
  return std::max({c.rate_e_to_v, c.rate_e_to_etilde_rad + c.rate_e_to_etilde_ph,
                   c.kappa_cavity});
}

double spectral_norm_hermitian(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues().minCoeff()),
                  std::abs(es.eigenvalues().maxCoeff()));
}

}  // namespace

NoiseChannels scaled_by(const NoiseChannels& channels, double gamma) {
  validate_rates(channels);
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  return {gamma * channels.rate_e_to_v, gamma * channels.rate_e_to_etilde_rad,
          gamma * channels.rate_e_to_etilde_ph, channels.kappa_cavity};
}

SpaceLayout noise_layout(int fock_cutoff) {
  if (fock_cutoff < 2)
    throw std::invalid_argument("noise layout needs fock cutoff >= 2");
  return SpaceLayout({{"j", 3}, {"k", 3}, {"cav", fock_cutoff + 1}});
}

std::vector<Matrix> jump_operators(const SpaceLayout& layout, const NoiseChannels& c) {
  validate_rates(c);
  std::vector<Matrix> ops;
  const double etilde_rate = c.rate_e_to_etilde_rad + c.rate_e_to_etilde_ph;
  for (int s = 0; s < layout.slot_count() - 1; ++s) {
    const Slot& slot = layout.slot(s);
    if (slot.radix == 2) {
      if (etilde_rate > 0.0)
        throw std::invalid_argument("slot '" + slot.label +
                                    "' has no intermediate level for the |e> -> |~e> channels");
      if (c.rate_e_to_v > 0.0) {
        Matrix l = Matrix::Zero(2, 2);
        l(0, 1) = std::sqrt(c.rate_e_to_v);
        ops.push_back(embed(layout, l, {slot.label}).entries);
      }
    } else if (slot.radix == 3) {
      if (c.rate_e_to_v > 0.0) {
        Matrix l = Matrix::Zero(3, 3);
        l(kLevelV, kLevelE) = std::sqrt(c.rate_e_to_v);
        ops.push_back(embed(layout, l, {slot.label}).entries);
      }
      if (etilde_rate > 0.0) {
        Matrix l = Matrix::Zero(3, 3);
        l(kLevelETilde, kLevelE) = std::sqrt(etilde_rate);
        ops.push_back(embed(layout, l, {slot.label}).entries);
      }
    } else {
      throw std::invalid_argument("dot slot '" + slot.label + "' must have radix 2 or 3");
    }
  }
  if (c.kappa_cavity > 0.0) {
    const Slot& cav = layout.cavity();
    ops.push_back(std::sqrt(c.kappa_cavity) *
                  embed(layout, annihilation_matrix(cav.radix), {cav.label}).entries);
  }
  return ops;
}

DensityOp lindblad_evolve(const OperatorM& hamiltonian, const NoiseChannels& channels,
                          const DensityOp& rho0, double duration_ps, double dt_ps) {
  if (!(hamiltonian.layout == rho0.layout))
    throw std::invalid_argument("lindblad_evolve: layouts differ");
  if (duration_ps <= 0.0 || dt_ps <= 0.0 || dt_ps > duration_ps)
    throw std::invalid_argument("lindblad_evolve: need 0 < dt <= duration");
  if (!is_hermitian(hamiltonian.entries, 1e-12))
    throw std::invalid_argument("lindblad_evolve: Hamiltonian is not Hermitian");

  const double stiffness = max_rate(channels) + spectral_norm_hermitian(hamiltonian.entries) / kHbarMeVPs;
  if (dt_ps * stiffness > 0.05) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6g", 0.05 / stiffness);
    throw std::invalid_argument("lindblad_evolve: dt too coarse for stability; use dt <= " +
                                std::string(buf) + " ps");
  }

  // drho = A rho + rho A^dag + sum L rho L^dag with A = -(i/hbar) H - 1/2 sum L^dag L.
  // The pulse Hamiltonians and jump operators are numerically sparse, so the
  // right-hand side runs on sparse views of them.
  using Sparse = Eigen::SparseMatrix<Complex>;
  Matrix a_dense = Complex{0.0, -1.0 / kHbarMeVPs} * hamiltonian.entries;
  std::vector<Sparse> ls, ls_dag;
  for (const Matrix& l : jump_operators(rho0.layout, channels)) {
    a_dense -= 0.5 * (l.adjoint() * l);
    ls.emplace_back(l.sparseView());
    ls_dag.emplace_back(l.adjoint().sparseView());
  }
  const Sparse a = a_dense.sparseView();
  const Sparse a_dag = a_dense.adjoint().sparseView();
  const auto rhs = [&](const Matrix& rho) {
    Matrix out = a * rho + rho * a_dag;
    for (size_t i = 0; i < ls.size(); ++i) out += ls[i] * (rho * ls_dag[i]).eval();
    return out;
  };

  const int steps = std::max(1, static_cast<int>(std::ceil(duration_ps / dt_ps - 1e-12)));
  const double h = duration_ps / steps;
  Matrix rho = rho0.entries;
  for (int i = 0; i < steps; ++i) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + (h / 2.0) * k1);
    const Matrix k3 = rhs(rho + (h / 2.0) * k2);
    const Matrix k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint().eval());
  }

  const double trace_tol = std::min(1e-8 * steps, 1e-6);
  if (std::abs(rho.trace().real() - 1.0) > trace_tol)
    throw std::runtime_error("lindblad_evolve: trace drifted beyond tolerance");
  return DensityOp{rho0.layout, std::move(rho)};
}

std::vector<TimedPulse> timed_cnot_plan(std::string_view control, std::string_view target,
                                        double phi, double omega1_mev, double omega_eff_mev) {
  if (omega1_mev <= 0.0 || omega_eff_mev <= 0.0)
    throw std::invalid_argument("timed_cnot_plan: couplings must be > 0");
  std::vector<TimedPulse> plan;
  for (const PulseSpec& spec : cnot_pulse_sequence(control, target, phi)) {
    double duration = 0.0;
    if (spec.kind == PulseKind::RedSideband)
      duration = spec.theta * kHbarMeVPs / (2.0 * omega_eff_mev);
    else if (spec.kind == PulseKind::Carrier)
      duration = spec.theta * kHbarMeVPs / (2.0 * omega1_mev);
    plan.push_back({spec, duration});
  }
  return plan;
}

double cnot_fidelity_under_noise(double gamma, const NoiseChannels& intra_channels,
                                 std::span<const TimedPulse> plan, int fock_cutoff) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw std::invalid_argument("gamma must lie in (0, 1]");
  const SpaceLayout layout = noise_layout(fock_cutoff);
  const NoiseChannels channels = scaled_by(intra_channels, gamma);
  const double rate = max_rate(channels);

  // Segment Hamiltonians H = -Omega K with Omega = theta hbar / (2 T), so the
  // closed-system step reproduces exp(i theta/2 K).
  struct Segment {
    bool instantaneous = false;
    OperatorM op;        // unitary when instantaneous, else Hamiltonian
    double duration = 0.0;
    double dt = 0.0;
  };
  std::vector<Segment> segments;
  for (const TimedPulse& tp : plan) {
    if (tp.spec.kind == PulseKind::PhaseZ || tp.duration_ps == 0.0) {
      if (tp.spec.kind != PulseKind::PhaseZ)
        throw std::invalid_argument("only phase_z pulses may be instantaneous");
      segments.push_back({true, compile_pulse(layout, tp.spec), 0.0, 0.0});
      continue;
    }
    const OperatorM k = pulse_generator(layout, tp.spec);
    const double omega = tp.spec.theta * kHbarMeVPs / (2.0 * tp.duration_ps);
    Segment seg;
    seg.op = OperatorM{layout, (-omega) * k.entries};
    seg.duration = tp.duration_ps;
    // Step well inside the stability guard; accuracy, not stability, binds.
    seg.dt = 0.01 / (rate + spectral_norm_hermitian(seg.op.entries) / kHbarMeVPs);
    segments.push_back(std::move(seg));
  }

  // Logic levels on the 3-level dots: v = digit 0, e = digit 2.
  const auto logic_digit = [](int bit) { return bit == 0 ? kLevelV : kLevelE; };
  std::vector<Ket> inputs, ideals;
  Vector superposition = Vector::Zero(layout.dimension());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      inputs.push_back(Ket::basis_state(layout, {logic_digit(a), logic_digit(b), 0}));
      ideals.push_back(Ket::basis_state(layout, {logic_digit(a), logic_digit(a ^ b), 0}));
      superposition += 0.5 * inputs.back().amplitudes;
    }
  inputs.push_back(Ket{layout, superposition});
  ideals.push_back(Ket{layout, superposition});  // CNOT permutes these four states

  double sum = 0.0;
  for (size_t i = 0; i < inputs.size(); ++i) {
    DensityOp rho = DensityOp::pure(inputs[i]);
    for (const Segment& seg : segments) {
      if (seg.instantaneous)
        rho = conjugate(seg.op, rho);
      else
        rho = lindblad_evolve(seg.op, channels, rho, seg.duration, seg.dt);
    }
    sum += fidelity(ideals[i], rho);
  }
  return sum / static_cast<double>(inputs.size());
}

std::string fidelity_csv(std::span<const std::pair<double, double>> rows) {
  std::string out = "gamma,fidelity\n";
  char buf[80];
  for (const auto& [gamma, fid] : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", gamma, fid);
    out += buf;
  }
  return out;
}

}  // namespace dotcavity
