#pragma once

namespace dotcavity {

/// Tight-binding parameters of one coupled dot pair.
struct DotPairParams {
  double e_d_mev = 0.0;       // isolated level of the smaller dot
  double e_dtilde_mev = 0.0;  // isolated level of the larger dot
  double t_coupling_mev = 0.0;

  double delta_e_mev() const { return e_d_mev - e_dtilde_mev; }
};

/// t^2 / (Delta^2 + t^2): squared weight of the excited eigenstate on the
/// "wrong" dot. Both arguments zero is undefined.
double separation_factor(double t_mev, double delta_e_mev);

/// Mixed eigenpair of the two-dot Hamiltonian [[E_d, t], [t, E_dtilde]].
/// The e_plus/e_minus/gamma/amp fields follow the closed formulas as
/// printed (E_pm = mean +/- sqrt(Delta^2 + 4 t^2), note the absent 1/2 on
/// the root); the exact_* fields come from direct 2x2 diagonalization so
/// the two routes can be compared instead of silently merged.
struct MixedPair {
  double e_plus_mev = 0.0;
  double e_minus_mev = 0.0;
  double gamma = 0.0;
  double amp_e_on_d = 0.0;       // sqrt(1 - gamma)
  double amp_e_on_dtilde = 0.0;  // sqrt(gamma)
  double exact_e_plus_mev = 0.0;
  double exact_e_minus_mev = 0.0;
  double exact_weight_dtilde = 0.0;  // |<dtilde|e>|^2 from diagonalization
};

MixedPair mix_pair(const DotPairParams& p);

}  // namespace dotcavity
