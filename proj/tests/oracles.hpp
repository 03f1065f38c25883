// Test-only oracles, deliberately independent of the library's computation
// paths: Taylor-series exponentials instead of spectral decomposition,
// hand-rolled Kronecker products instead of embed(), closed-form two-level
// dynamics.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

namespace oracles {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// exp(A) by scaling-and-squaring of a plain Taylor series.
inline Matrix taylor_expm(const Matrix& a) {
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix x = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix random_hermitian(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex{uni(rng), uni(rng)};
  return 0.5 * (m + m.adjoint().eval());
}

/// Resonant two-level Rabi: population transferred out of the ground state
/// under H = Omega (|e><v| + h.c.) after time t.
inline double rabi_excited_population(double omega_mev, double t_ps, double hbar) {
  const double s = std::sin(omega_mev * t_ps / hbar);
  return s * s;
}

/// Truncated annihilation operator, built directly.
inline Matrix lowering(int dim) {
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace oracles
