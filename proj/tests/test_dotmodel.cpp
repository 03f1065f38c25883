#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "dotcavity/dotmodel.hpp"

using namespace dotcavity;

TEST_SUITE("dotmodel") {

TEST_CASE("separation factor values") {
  CHECK(std::abs(separation_factor(0.01, 10.0) - 1e-6) / 1e-6 <= 1e-3);
  CHECK(separation_factor(0.0, 3.0) == 0.0);
  CHECK(separation_factor(2.0, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(separation_factor(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(separation_factor(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("separation factor is monotone in t and in Delta") {
  double prev = 0.0;
  for (double t = 0.01; t <= 1.0; t += 0.05) {
    const double g = separation_factor(t, 5.0);
    CHECK(g > prev);
    prev = g;
  }
  prev = 1.0;
  for (double delta = 0.1; delta <= 10.0; delta += 0.5) {
    const double g = separation_factor(0.2, delta);
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("decoupled limit t = 0") {
  const MixedPair m = mix_pair({10.0, 0.0, 0.0});
  CHECK(m.exact_e_plus_mev == doctest::Approx(10.0));
  CHECK(m.exact_e_minus_mev == doctest::Approx(0.0));
  CHECK(m.gamma == 0.0);
  CHECK(m.amp_e_on_d == 1.0);
  CHECK(m.amp_e_on_dtilde == 0.0);
  CHECK(m.exact_weight_dtilde == doctest::Approx(0.0));
}

TEST_CASE("printed and exact eigenenergies are both reported, differing by the 1/2") {
  const MixedPair m = mix_pair({10.0, 0.0, 0.01});
  const double printed_split = m.e_plus_mev - m.e_minus_mev;
  const double exact_split = m.exact_e_plus_mev - m.exact_e_minus_mev;
  CHECK(printed_split == doctest::Approx(2.0 * exact_split).epsilon(1e-12));
  CHECK(0.5 * (m.e_plus_mev + m.e_minus_mev) == doctest::Approx(5.0));
}

TEST_CASE("closed-formula gamma agrees with exact diagonalization in the small-t regime") {
  const MixedPair m = mix_pair({10.0, 0.0, 0.01});
  CHECK(std::abs(m.gamma - m.exact_weight_dtilde) / m.exact_weight_dtilde <= 1e-3);
  CHECK(m.amp_e_on_d * m.amp_e_on_d + m.amp_e_on_dtilde * m.amp_e_on_dtilde ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric pair: formula saturates at 1 while exact mixing is 1/2") {
  const MixedPair m = mix_pair({3.0, 3.0, 0.4});
  CHECK(m.gamma == doctest::Approx(1.0));
  CHECK(m.exact_weight_dtilde == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("perturbative agreement band |gamma - exact|/exact <= 3 (t/Delta)^2") {
  for (double ratio = 1e-3; ratio <= 0.1; ratio *= 1.6) {
    const double delta = 7.0;
    const double t = ratio * delta;
    const MixedPair m = mix_pair({delta + 1.0, 1.0, t});
    const double rel = std::abs(m.gamma - m.exact_weight_dtilde) / m.exact_weight_dtilde;
    CHECK(rel <= 3.0 * ratio * ratio);
  }
}

TEST_CASE("exact eigenvectors are orthonormal") {
  Eigen::Matrix2d h;
  h << 4.0, 0.3, 0.3, 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
  const Eigen::Matrix2d v = es.eigenvectors();
  CHECK((v.transpose() * v - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
}

}  // TEST_SUITE
