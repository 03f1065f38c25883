#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dotcavity/qspace.hpp"

namespace dotcavity {

/// Phase constant of the composite photon-conditional gate. Written delta_g
/// rather than delta to avoid colliding with the laser detuning.
struct GateConstants {
  double phi0 = std::numbers::pi / (2.0 * std::numbers::sqrt2);
  Complex delta_g = std::polar(1.0, std::numbers::pi / (2.0 * std::numbers::sqrt2));
};

enum class PulseKind { RedSideband, Carrier, PhaseZ };

std::string_view pulse_kind_name(PulseKind kind);

/// One physical pulse. theta = 2*Omega*T/hbar is the Rabi angle, phi the
/// laser phase; PhaseZ reads phi0 only.
struct PulseSpec {
  PulseKind kind = PulseKind::Carrier;
  std::string target;
  double theta = 0.0;
  double phi = 0.0;
  double phi0 = 0.0;
};

/// Two 2-level dots plus a cavity: slots ("j", 2), ("k", 2), ("cav", cutoff+1).
SpaceLayout two_qubit_cavity_layout(int fock_cutoff);

/// exp[i(theta/2)(|e><v| a e^{i phi} + h.c.)] on (target dot, cavity).
/// |v,0> is dark; the pair (|v,n+1>, |e,n>) rotates with angle sqrt(n+1)*theta.
OperatorM red_sideband(const SpaceLayout& layout, std::string_view target,
                       double theta, double phi);

/// exp[i(theta/2)(|e><v| e^{i phi} + h.c.)] on the target dot; photon number
/// strictly conserved.
OperatorM carrier_rotation(const SpaceLayout& layout, std::string_view target,
                           double theta, double phi);

/// (1/sqrt2) [[-1, 1], [1, 1]] on the target dot in basis (|0~>, |1~>);
/// self-inverse.
OperatorM hadamard(const SpaceLayout& layout, std::string_view target);

/// diag(e^{i phi0}, e^{-i phi0}) on the target dot.
OperatorM phase_z(const SpaceLayout& layout, std::string_view target, double phi0);

/// Three-pulse composite R(-pi/2,0) R(sqrt2*pi,-pi/2) R(pi/2,0), rightmost
/// applied first. Diagonal (1, e^{-i pi/sqrt2}, e^{i pi/sqrt2}, -1) on
/// span{|0~;0>, |0~;1>, |1~;0>, |1~;1>}; needs cutoff >= 2 so the
/// sqrt2-Rabi pair |e,1> <-> |v,2> is representable.
OperatorM p_gate(const SpaceLayout& layout, std::string_view target);

/// H [P Z(phi0)] H: the cavity photon conditions the dot flip. Photon-0 block
/// is delta_g * I, photon-1 block is -conj(delta_g) * sigma_x.
OperatorM g_gate(const SpaceLayout& layout, std::string_view target);

/// Z_j(-phi0) R_j(pi,phi) G_k R_j(pi,phi): phase-exact CNOT on the
/// zero-photon sector, independent of phi.
OperatorM cnot(const SpaceLayout& layout, std::string_view control,
               std::string_view target, double phi = 0.0);

/// The CNOT as a flat pulse list (application order; Hadamards decomposed
/// into two carrier pulses each). The composed product equals the cnot()
/// matrix up to a global phase of -1, which state fidelities ignore.
std::vector<PulseSpec> cnot_pulse_sequence(std::string_view control,
                                           std::string_view target,
                                           double phi = 0.0);

/// Hermitian generator K of a RedSideband/Carrier pulse such that the pulse
/// unitary is exp(i theta/2 K). Accepts 2-level dot slots and 3-level dot
/// slots ordered (v, ~e, e); the pulse couples v = digit 0 to e = top digit,
/// leaving any intermediate level untouched. PhaseZ has no generator.
OperatorM pulse_generator(const SpaceLayout& layout, const PulseSpec& pulse);

/// Compiles a pulse to its unitary (any dot radix accepted, as above).
OperatorM compile_pulse(const SpaceLayout& layout, const PulseSpec& pulse);

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Runs the full protocol check suite on a two-qubit + cavity layout:
/// red-sideband swap identities, the composite-pulse diagonal, the
/// photon-conditional gate action, the CNOT truth table, excitation
/// conservation and Fock-truncation leakage. Requires cutoff >= 2.
VerificationReport verify_protocol(const SpaceLayout& layout);

}  // namespace dotcavity
