#include "dotcavity/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace dotcavity {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dot_slot(const SpaceLayout& layout, int pos) {
  if (pos == layout.slot_count() - 1)
    throw std::invalid_argument("pulse target '" + layout.slot(pos).label +
                                "' is the cavity slot");
}

// Digit hosting |v> and |e> in a dot slot: (0, radix-1). A radix-3 slot keeps
// the intermediate level at digit 1, untouched by pulses.
std::pair<int, int> logic_digits(const Slot& slot) {
  if (slot.radix != 2 && slot.radix != 3)
    throw std::invalid_argument("dot slot '" + slot.label + "' must have radix 2 or 3");
  return {0, slot.radix - 1};
}

Matrix carrier_local(const Slot& slot, double phi) {
  auto [v, e] = logic_digits(slot);
  Matrix k = Matrix::Zero(slot.radix, slot.radix);
  k(e, v) = std::polar(1.0, phi);
  k(v, e) = std::polar(1.0, -phi);
  return k;
}

Matrix phase_z_local(const Slot& slot, double phi0) {
  auto [v, e] = logic_digits(slot);
  Matrix z = Matrix::Identity(slot.radix, slot.radix);
  z(v, v) = std::polar(1.0, phi0);
  z(e, e) = std::polar(1.0, -phi0);
  return z;
}

Matrix two_level_matrix_local(const SpaceLayout& layout, std::string_view target,
                              const Matrix& m2) {
  const Slot& slot = layout.slot(layout.slot_index(target));
  if (slot.radix != 2)
    throw std::invalid_argument("target '" + slot.label + "' is not a 2-level slot");
  return m2;
}

}  // namespace

std::string_view pulse_kind_name(PulseKind kind) {
  switch (kind) {
    case PulseKind::RedSideband: return "red_sideband";
    case PulseKind::Carrier: return "carrier";
    case PulseKind::PhaseZ: return "phase_z";
  }
  return "?";
}

SpaceLayout two_qubit_cavity_layout(int fock_cutoff) {
  if (fock_cutoff < 1)
    throw std::invalid_argument("fock cutoff must be >= 1");
  return SpaceLayout({{"j", 2}, {"k", 2}, {"cav", fock_cutoff + 1}});
}

OperatorM pulse_generator(const SpaceLayout& layout, const PulseSpec& pulse) {
  const int pos = layout.slot_index(pulse.target);
  require_dot_slot(layout, pos);
  const Slot& slot = layout.slot(pos);
  switch (pulse.kind) {
    case PulseKind::Carrier:
      return embed(layout, carrier_local(slot, pulse.phi), {slot.label});
    case PulseKind::RedSideband: {
      const Slot& cav = layout.cavity();
      if (cav.radix < 2)
        throw std::invalid_argument("cavity cannot represent one photon");
      auto [v, e] = logic_digits(slot);
      const Matrix a = annihilation_matrix(cav.radix);
      const int d = slot.radix * cav.radix;
      Matrix k = Matrix::Zero(d, d);
      // |e><v| (x) a e^{i phi} + h.c., local index = dot digit * cav radix + n
      for (int n1 = 0; n1 < cav.radix; ++n1)
        for (int n2 = 0; n2 < cav.radix; ++n2) {
          const Complex amp = a(n1, n2);
          if (amp == Complex{0.0, 0.0}) continue;
          k(e * cav.radix + n1, v * cav.radix + n2) += std::polar(1.0, pulse.phi) * amp;
          k(v * cav.radix + n2, e * cav.radix + n1) += std::polar(1.0, -pulse.phi) * amp;
        }
      return embed(layout, k, {slot.label, cav.label});
    }
    case PulseKind::PhaseZ:
      throw std::invalid_argument("phase_z pulse has no Hermitian generator");
  }
  throw std::invalid_argument("unknown pulse kind");
}

OperatorM compile_pulse(const SpaceLayout& layout, const PulseSpec& pulse) {
  if (pulse.kind == PulseKind::PhaseZ) {
    const Slot& slot = layout.slot(layout.slot_index(pulse.target));
    require_dot_slot(layout, layout.slot_index(pulse.target));
    return embed(layout, phase_z_local(slot, pulse.phi0), {slot.label});
  }
  return expm_hermitian(pulse_generator(layout, pulse), pulse.theta / 2.0);
}

OperatorM red_sideband(const SpaceLayout& layout, std::string_view target,
                       double theta, double phi) {
  const Slot& slot = layout.slot(layout.slot_index(target));
  if (slot.radix != 2)
    throw std::invalid_argument("red_sideband target '" + slot.label +
                                "' is not a 2-level slot");
  return compile_pulse(layout, {PulseKind::RedSideband, std::string(target), theta, phi, 0.0});
}

OperatorM carrier_rotation(const SpaceLayout& layout, std::string_view target,
                           double theta, double phi) {
  const Slot& slot = layout.slot(layout.slot_index(target));
  if (slot.radix != 2)
    throw std::invalid_argument("carrier target '" + slot.label + "' is not a 2-level slot");
  return compile_pulse(layout, {PulseKind::Carrier, std::string(target), theta, phi, 0.0});
}

OperatorM hadamard(const SpaceLayout& layout, std::string_view target) {
  Matrix h(2, 2);
  const double s = 1.0 / std::numbers::sqrt2;
  h << -s, s, s, s;
  return embed(layout, two_level_matrix_local(layout, target, h), {std::string(target)});
}

OperatorM phase_z(const SpaceLayout& layout, std::string_view target, double phi0) {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = std::polar(1.0, phi0);
  z(1, 1) = std::polar(1.0, -phi0);
  return embed(layout, two_level_matrix_local(layout, target, z), {std::string(target)});
}

OperatorM p_gate(const SpaceLayout& layout, std::string_view target) {
  if (layout.fock_cutoff() < 2)
    throw std::invalid_argument(
        "p_gate needs fock cutoff >= 2: the sqrt(2)-Rabi pair |e,1> <-> |v,2> "
        "must be representable");
  const OperatorM first = red_sideband(layout, target, kPi / 2.0, 0.0);
  const OperatorM second = red_sideband(layout, target, std::numbers::sqrt2 * kPi, -kPi / 2.0);
  const OperatorM third = red_sideband(layout, target, -kPi / 2.0, 0.0);
  return OperatorM{layout, third.entries * second.entries * first.entries};
}

OperatorM g_gate(const SpaceLayout& layout, std::string_view target) {
  const GateConstants gc;
  const OperatorM h = hadamard(layout, target);
  const OperatorM p = p_gate(layout, target);
  const OperatorM z = phase_z(layout, target, gc.phi0);
  return OperatorM{layout, h.entries * p.entries * z.entries * h.entries};
}

OperatorM cnot(const SpaceLayout& layout, std::string_view control,
               std::string_view target, double phi) {
  if (control == target)
    throw std::invalid_argument("cnot: control and target must differ");
  const GateConstants gc;
  const OperatorM swap = red_sideband(layout, control, kPi, phi);
  const OperatorM g = g_gate(layout, target);
  const OperatorM unphase = phase_z(layout, control, -gc.phi0);
  return OperatorM{layout, unphase.entries * swap.entries * g.entries * swap.entries};
}

std::vector<PulseSpec> cnot_pulse_sequence(std::string_view control,
                                           std::string_view target, double phi) {
  if (control == target)
    throw std::invalid_argument("cnot: control and target must differ");
  const GateConstants gc;
  const std::string j(control), k(target);
  const double s2pi = std::numbers::sqrt2 * kPi;
  // Hadamard = carrier(pi,0) * carrier(pi/2,pi/2) up to a global phase i;
  // R(-pi/2,0) is realized as R(pi/2,pi) so every theta is a positive area.
  return {
      {PulseKind::RedSideband, j, kPi, phi, 0.0},
      {PulseKind::Carrier, k, kPi / 2.0, kPi / 2.0, 0.0},
      {PulseKind::Carrier, k, kPi, 0.0, 0.0},
      {PulseKind::PhaseZ, k, 0.0, 0.0, gc.phi0},
      {PulseKind::RedSideband, k, kPi / 2.0, 0.0, 0.0},
      {PulseKind::RedSideband, k, s2pi, -kPi / 2.0, 0.0},
      {PulseKind::RedSideband, k, kPi / 2.0, kPi, 0.0},
      {PulseKind::Carrier, k, kPi / 2.0, kPi / 2.0, 0.0},
      {PulseKind::Carrier, k, kPi, 0.0, 0.0},
      {PulseKind::RedSideband, j, kPi, phi, 0.0},
      {PulseKind::PhaseZ, j, 0.0, 0.0, -gc.phi0},
  };
}

bool VerificationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

struct CheckAccumulator {
  VerificationReport report;
  void add(std::string name, double deviation, double tolerance) {
    report.checks.push_back({std::move(name), deviation, tolerance, deviation <= tolerance});
  }
};

double column_deviation(const OperatorM& u, const Ket& in, const Vector& expected) {
  const Vector out = u.entries * in.amplitudes;
  return (out - expected).cwiseAbs().maxCoeff();
}

}  // namespace

VerificationReport verify_protocol(const SpaceLayout& layout) {
  if (layout.slot_count() != 3)
    throw std::invalid_argument("verify_protocol needs exactly two dot slots and a cavity slot");
  for (int i = 0; i < 2; ++i)
    if (layout.slot(i).radix != 2)
      throw std::invalid_argument("verify_protocol: slot '" + layout.slot(i).label +
                                  "' must be a 2-level dot");
  if (layout.fock_cutoff() < 2)
    throw std::invalid_argument(
        "verify_protocol needs fock cutoff >= 2: the sqrt(2)-Rabi pair "
        "|e,1> <-> |v,2> must be representable");

  const std::string j = layout.slot(0).label;
  const std::string k = layout.slot(1).label;
  const std::string cav = layout.cavity().label;
  const GateConstants gc;
  const int dim = layout.dimension();
  CheckAccumulator acc;

  const double swap_phis[] = {0.0, 0.5, kPi / 3.0, 1.7, 2.0 * kPi - 0.3};

  // Swap identities of the pi red-sideband pulse on the control dot.
  {
    double dev_down = 0.0, dev_up = 0.0;
    for (double phi : swap_phis) {
      const OperatorM r = red_sideband(layout, j, kPi, phi);
      const Ket e0 = Ket::basis_state(layout, {1, 0, 0});
      const Ket v1 = Ket::basis_state(layout, {0, 0, 1});
      dev_down = std::max(dev_down,
                          column_deviation(r, e0, Complex(0.0, 1.0) * std::polar(1.0, -phi) * v1.amplitudes));
      dev_up = std::max(dev_up,
                        column_deviation(r, v1, Complex(0.0, 1.0) * std::polar(1.0, phi) * e0.amplitudes));
    }
    acc.add("swap |1;0> -> i e^{-i phi} |0;1>", dev_down, 1e-10);
    acc.add("swap |0;1> -> i e^{+i phi} |1;0>", dev_up, 1e-10);
  }

  // Unitarity of every building block.
  {
    double dev = 0.0;
    const Matrix eye = Matrix::Identity(dim, dim);
    for (const OperatorM& u : {red_sideband(layout, j, kPi, 0.7),
                               carrier_rotation(layout, k, 1.1, 0.3),
                               hadamard(layout, k), phase_z(layout, k, gc.phi0),
                               p_gate(layout, k), g_gate(layout, k),
                               cnot(layout, j, k, 0.0)})
      dev = std::max(dev, max_abs(u.entries.adjoint() * u.entries - eye));
    acc.add("unitarity of pulse and gate matrices", dev, 1e-10);
  }

  // Composite-pulse diagonal on the dot-k logic x {0,1} photon subspace.
  const OperatorM p = p_gate(layout, k);
  {
    const int i00 = basis_index(layout, {0, 0, 0});
    const int i01 = basis_index(layout, {0, 0, 1});
    const int i10 = basis_index(layout, {0, 1, 0});
    const int i11 = basis_index(layout, {0, 1, 1});
    const int sub[4] = {i00, i01, i10, i11};
    const Complex want[4] = {1.0, std::polar(1.0, -kPi / std::numbers::sqrt2),
                             std::polar(1.0, kPi / std::numbers::sqrt2), -1.0};
    double dev = 0.0;
    for (int n = 0; n < 4; ++n) dev = std::max(dev, std::abs(p.entries(sub[n], sub[n]) - want[n]));
    acc.add("composite pulse diagonal", dev, 1e-9);

    double leak = 0.0;
    for (int n = 0; n < 4; ++n)
      for (int m = 0; m < dim; ++m) {
        if (m == sub[n]) continue;
        leak = std::max(leak, std::abs(p.entries(m, sub[n])));
        leak = std::max(leak, std::abs(p.entries(sub[n], m)));
      }
    acc.add("composite pulse subspace leakage", leak, 1e-10);
  }

  // Photon-conditional gate: four mappings and the two photon blocks.
  {
    const OperatorM g = g_gate(layout, k);
    const Complex dg = gc.delta_g;
    const auto in = [&](int b, int n) { return Ket::basis_state(layout, {0, b, n}); };
    double dev = 0.0;
    dev = std::max(dev, column_deviation(g, in(0, 0), dg * in(0, 0).amplitudes));
    dev = std::max(dev, column_deviation(g, in(0, 1), -std::conj(dg) * in(1, 1).amplitudes));
    dev = std::max(dev, column_deviation(g, in(1, 0), dg * in(1, 0).amplitudes));
    dev = std::max(dev, column_deviation(g, in(1, 1), -std::conj(dg) * in(0, 1).amplitudes));
    acc.add("photon-conditional gate mappings", dev, 1e-9);

    double block_dev = 0.0;
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) {
        const int r0 = basis_index(layout, {0, b1, 0});
        const int c0 = basis_index(layout, {0, b2, 0});
        const Complex want0 = b1 == b2 ? dg : Complex{0.0, 0.0};
        block_dev = std::max(block_dev, std::abs(g.entries(r0, c0) - want0));
        const int r1 = basis_index(layout, {0, b1, 1});
        const int c1 = basis_index(layout, {0, b2, 1});
        const Complex want1 = b1 != b2 ? -std::conj(dg) : Complex{0.0, 0.0};
        block_dev = std::max(block_dev, std::abs(g.entries(r1, c1) - want1));
      }
    acc.add("photon-0 block delta_g I, photon-1 block -delta_g* sigma_x", block_dev, 1e-9);
  }

  // CNOT truth table, phase exact, for several laser phases.
  {
    double dev = 0.0;
    for (double phi : {0.0, kPi / 3.0, 1.7}) {
      const OperatorM u = cnot(layout, j, k, phi);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Ket in = Ket::basis_state(layout, {a, b, 0});
          const Ket out = Ket::basis_state(layout, {a, a ^ b, 0});
          dev = std::max(dev, column_deviation(u, in, out.amplitudes));
        }
    }
    acc.add("cnot truth table (phase exact, phi-independent)", dev, 1e-9);
  }

  // Applying the CNOT twice restores the zero-photon computational block.
  {
    const OperatorM u = cnot(layout, j, k, 0.0);
    const Matrix uu = u.entries * u.entries;
    double dev = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const Ket in = Ket::basis_state(layout, {a, b, 0});
        dev = std::max(dev, (uu * in.amplitudes - in.amplitudes).cwiseAbs().maxCoeff());
      }
    acc.add("cnot involution on the zero-photon block", dev, 1e-9);
  }

  // Red sideband commutes with total excitation (dot e-populations + photons).
  {
    Matrix number = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const std::vector<int> d = basis_digits(layout, i);
      double n = static_cast<double>(d.back());
      for (int q = 0; q < layout.slot_count() - 1; ++q)
        if (d[static_cast<size_t>(q)] == layout.slot(q).radix - 1) n += 1.0;
      number(i, i) = n;
    }
    const OperatorM r = red_sideband(layout, k, 1.3, 0.4);
    const double dev = max_abs(r.entries * number * r.entries.adjoint() - number);
    acc.add("red-sideband excitation conservation", dev, 1e-10);
  }

  // Fock truncation: nothing above two photons at any point of the sequence.
  {
    double worst = 0.0;
    const auto pulses = cnot_pulse_sequence(j, k, 0.0);
    std::vector<OperatorM> compiled;
    compiled.reserve(pulses.size());
    for (const PulseSpec& ps : pulses) compiled.push_back(compile_pulse(layout, ps));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Ket state = Ket::basis_state(layout, {a, b, 0});
        for (const OperatorM& u : compiled) {
          state = apply(u, state);
          for (int n = 3; n <= layout.fock_cutoff(); ++n)
            worst = std::max(worst, population(state, cav, n));
        }
      }
    acc.add("population above two photons during the sequence", worst, 1e-10);
  }

  return acc.report;
}

}  // namespace dotcavity
