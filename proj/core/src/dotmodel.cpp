#include "dotcavity/dotmodel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace dotcavity {

double separation_factor(double t_mev, double delta_e_mev) {
  if (t_mev < 0.0) throw std::invalid_argument("inter-dot coupling t must be >= 0");
  if (t_mev == 0.0 && delta_e_mev == 0.0)
    throw std::invalid_argument("separation factor undefined at t = Delta = 0");
  const double t2 = t_mev * t_mev;
  return t2 / (delta_e_mev * delta_e_mev + t2);
}

MixedPair mix_pair(const DotPairParams& p) {
  if (p.t_coupling_mev < 0.0)
    throw std::invalid_argument("inter-dot coupling t must be >= 0");
  const double t = p.t_coupling_mev;
  const double delta = p.delta_e_mev();
  const double mean = 0.5 * (p.e_d_mev + p.e_dtilde_mev);
  const double root = std::sqrt(delta * delta + 4.0 * t * t);

  MixedPair out;
  out.e_plus_mev = mean + root;   // as printed (no 1/2 on the root)
  out.e_minus_mev = mean - root;
  out.gamma = (t == 0.0 && delta == 0.0) ? 0.0 : separation_factor(t, delta);
  out.amp_e_on_d = std::sqrt(1.0 - out.gamma);
  out.amp_e_on_dtilde = std::sqrt(out.gamma);

  Eigen::Matrix2d h;
  h << p.e_d_mev, t, t, p.e_dtilde_mev;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
  out.exact_e_minus_mev = es.eigenvalues()(0);
  out.exact_e_plus_mev = es.eigenvalues()(1);
  // |e> is the eigenvector living mostly on |d>; ties (Delta = 0) pick the
  // higher-energy branch, which has weight exactly 1/2 on each dot.
  const Eigen::Vector2d lo = es.eigenvectors().col(0);
  const Eigen::Vector2d hi = es.eigenvectors().col(1);
  const Eigen::Vector2d& e_vec = (hi(0) * hi(0) >= lo(0) * lo(0)) ? hi : lo;
  out.exact_weight_dtilde = e_vec(1) * e_vec(1);
  return out;
}

}  // namespace dotcavity
