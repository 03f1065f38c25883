#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dotcavity {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// One tensor factor of the composite Hilbert space.
struct Slot {
  std::string label;
  int radix = 2;
};

/// Ordered tensor-factor structure of the composite space. Index convention
/// is mixed radix with the leftmost slot most significant; this ordering is
/// frozen because every gate truth table depends on it. By convention the
/// last slot is the cavity (radix = fock cutoff + 1) and the preceding slots
/// are dots.
class SpaceLayout {
 public:
  SpaceLayout() = default;
  explicit SpaceLayout(std::vector<Slot> slots);

  int dimension() const { return dimension_; }
  int slot_count() const { return static_cast<int>(slots_.size()); }
  const Slot& slot(int i) const { return slots_.at(static_cast<size_t>(i)); }
  const std::vector<Slot>& slots() const { return slots_; }

  /// Position of the slot with the given label; throws on unknown label.
  int slot_index(std::string_view label) const;

  /// Cavity slot by convention (the last one).
  const Slot& cavity() const;
  int fock_cutoff() const { return cavity().radix - 1; }

  bool operator==(const SpaceLayout& other) const;

 private:
  std::vector<Slot> slots_;
  int dimension_ = 1;
};

/// Mixed-radix index of a digit tuple, leftmost slot most significant.
int basis_index(const SpaceLayout& layout, std::span<const int> digits);
int basis_index(const SpaceLayout& layout, std::initializer_list<int> digits);

/// Exact inverse of basis_index.
std::vector<int> basis_digits(const SpaceLayout& layout, int index);

/// Normalized pure state on a layout.
struct Ket {
  SpaceLayout layout;
  Vector amplitudes;

  static Ket basis_state(const SpaceLayout& layout, std::span<const int> digits);
  static Ket basis_state(const SpaceLayout& layout, std::initializer_list<int> digits);
  double norm() const { return amplitudes.norm(); }
};

/// Dense operator on a layout.
struct OperatorM {
  SpaceLayout layout;
  Matrix entries;
};

/// Trace-one Hermitian positive matrix on a layout.
struct DensityOp {
  SpaceLayout layout;
  Matrix entries;

  static DensityOp pure(const Ket& ket);
  /// Validates Hermiticity (1e-10), trace (1e-8) and positivity (-1e-8).
  static DensityOp from_matrix(const SpaceLayout& layout, Matrix m);
  double trace() const { return entries.trace().real(); }
};

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol = 1e-12);
bool is_unitary(const Matrix& m, double tol = 1e-10);

OperatorM identity_op(const SpaceLayout& layout);

/// Truncated bosonic annihilation operator on a dim-dimensional Fock block.
Matrix annihilation_matrix(int dim);

/// Embeds local_op (indexed over the named slots, in the order given, first
/// label most significant) into the full space, identity on all other slots.
/// Works for non-adjacent named slots.
OperatorM embed(const SpaceLayout& layout, const Matrix& local_op,
                std::span<const std::string> slot_labels);
OperatorM embed(const SpaceLayout& layout, const Matrix& local_op,
                std::initializer_list<std::string> slot_labels);

/// exp(i*scale*G) for Hermitian G via spectral decomposition. The result is
/// unitary to 1e-10; non-Hermitian input is rejected.
OperatorM expm_hermitian(const OperatorM& generator, double scale);

Ket apply(const OperatorM& op, const Ket& ket);
DensityOp conjugate(const OperatorM& op, const DensityOp& rho);  // U rho U^dag

/// |<a|b>|^2.
double fidelity(const Ket& a, const Ket& b);

/// <ideal| rho |ideal> for a pure target state.
double fidelity(const Ket& ideal, const DensityOp& rho);

/// Summed |amplitude|^2 over basis states whose digit at the slot equals
/// `digit`. Populations over all digits of a slot sum to 1.
double population(const Ket& ket, std::string_view slot_label, int digit);

/// Expectation of the photon number on the cavity slot.
double mean_photon_number(const Ket& ket);

}  // namespace dotcavity
