#include "dotcavity/qspace.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dotcavity {

SpaceLayout::SpaceLayout(std::vector<Slot> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw std::invalid_argument("layout needs at least one slot");
  std::set<std::string_view> seen;
  dimension_ = 1;
  for (const Slot& s : slots_) {
    if (s.radix < 2)
      throw std::invalid_argument("slot '" + s.label + "': radix must be >= 2");
    if (!seen.insert(s.label).second)
      throw std::invalid_argument("duplicate slot label '" + s.label + "'");
    dimension_ *= s.radix;
  }
}

int SpaceLayout::slot_index(std::string_view label) const {
  for (size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown slot label '" + std::string(label) + "'");
}

const Slot& SpaceLayout::cavity() const {
  if (slots_.empty()) throw std::invalid_argument("empty layout has no cavity slot");
  return slots_.back();
}

bool SpaceLayout::operator==(const SpaceLayout& other) const {
  if (slots_.size() != other.slots_.size()) return false;
  for (size_t i = 0; i < slots_.size(); ++i)
    if (slots_[i].label != other.slots_[i].label || slots_[i].radix != other.slots_[i].radix)
      return false;
  return true;
}

int basis_index(const SpaceLayout& layout, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != layout.slot_count())
    throw std::invalid_argument("digit count does not match slot count");
  int index = 0;
  for (int i = 0; i < layout.slot_count(); ++i) {
    const Slot& s = layout.slot(i);
    if (digits[static_cast<size_t>(i)] < 0 || digits[static_cast<size_t>(i)] >= s.radix)
      throw std::invalid_argument("digit out of range for slot '" + s.label + "'");
    index = index * s.radix + digits[static_cast<size_t>(i)];
  }
  return index;
}

int basis_index(const SpaceLayout& layout, std::initializer_list<int> digits) {
  return basis_index(layout, std::span<const int>(digits.begin(), digits.size()));
}

std::vector<int> basis_digits(const SpaceLayout& layout, int index) {
  if (index < 0 || index >= layout.dimension())
    throw std::invalid_argument("basis index out of range");
  std::vector<int> digits(static_cast<size_t>(layout.slot_count()));
  for (int i = layout.slot_count() - 1; i >= 0; --i) {
    const int radix = layout.slot(i).radix;
    digits[static_cast<size_t>(i)] = index % radix;
    index /= radix;
  }
  return digits;
}

Ket Ket::basis_state(const SpaceLayout& layout, std::span<const int> digits) {
  Vector amps = Vector::Zero(layout.dimension());
  amps(basis_index(layout, digits)) = 1.0;
  return Ket{layout, std::move(amps)};
}

Ket Ket::basis_state(const SpaceLayout& layout, std::initializer_list<int> digits) {
  return basis_state(layout, std::span<const int>(digits.begin(), digits.size()));
}

DensityOp DensityOp::pure(const Ket& ket) {
  return DensityOp{ket.layout, ket.amplitudes * ket.amplitudes.adjoint()};
}

DensityOp DensityOp::from_matrix(const SpaceLayout& layout, Matrix m) {
  if (m.rows() != layout.dimension() || m.cols() != layout.dimension())
    throw std::invalid_argument("density matrix dimension does not match layout");
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-8 || std::abs(m.trace().imag()) > 1e-8)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-8)
    throw std::invalid_argument("density matrix is not positive semidefinite");
  return DensityOp{layout, std::move(m)};
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

OperatorM identity_op(const SpaceLayout& layout) {
  return OperatorM{layout, Matrix::Identity(layout.dimension(), layout.dimension())};
}

Matrix annihilation_matrix(int dim) {
  if (dim < 1) throw std::invalid_argument("Fock block dimension must be >= 1");
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

OperatorM embed(const SpaceLayout& layout, const Matrix& local_op,
                std::span<const std::string> slot_labels) {
  if (slot_labels.empty()) throw std::invalid_argument("embed: no slots named");
  std::vector<int> positions;
  positions.reserve(slot_labels.size());
  int local_dim = 1;
  for (const std::string& label : slot_labels) {
    const int pos = layout.slot_index(label);
    for (int p : positions)
      if (p == pos) throw std::invalid_argument("embed: slot '" + label + "' named twice");
    positions.push_back(pos);
    local_dim *= layout.slot(pos).radix;
  }
  if (local_op.rows() != local_dim || local_op.cols() != local_dim)
    throw std::invalid_argument("embed: local operator is " + std::to_string(local_op.rows()) +
                                "x" + std::to_string(local_op.cols()) + " but named slots span dimension " +
                                std::to_string(local_dim));

  const int dim = layout.dimension();
  Matrix out = Matrix::Zero(dim, dim);
  // For each full row index, write the row's couplings by replacing the named
  // slots' digits with every local column combination; all other digits match.
  for (int row = 0; row < dim; ++row) {
    std::vector<int> digits = basis_digits(layout, row);
    int local_row = 0;
    for (int p : positions) local_row = local_row * layout.slot(p).radix + digits[static_cast<size_t>(p)];
    for (int local_col = 0; local_col < local_dim; ++local_col) {
      const Complex v = local_op(local_row, local_col);
      if (v == Complex{0.0, 0.0}) continue;
      std::vector<int> col_digits = digits;
      int rem = local_col;
      for (size_t i = positions.size(); i-- > 0;) {
        const int radix = layout.slot(positions[i]).radix;
        col_digits[static_cast<size_t>(positions[i])] = rem % radix;
        rem /= radix;
      }
      out(row, basis_index(layout, col_digits)) += v;
    }
  }
  return OperatorM{layout, std::move(out)};
}

OperatorM embed(const SpaceLayout& layout, const Matrix& local_op,
                std::initializer_list<std::string> slot_labels) {
  std::vector<std::string> labels(slot_labels);
  return embed(layout, local_op, std::span<const std::string>(labels));
}

OperatorM expm_hermitian(const OperatorM& generator, double scale) {
  if (!is_hermitian(generator.entries, 1e-12))
    throw std::invalid_argument("expm_hermitian: generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(generator.entries);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  const auto& evals = es.eigenvalues();
  Vector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    phases(i) = std::polar(1.0, scale * evals(i));
  Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return OperatorM{generator.layout, std::move(u)};
}

Ket apply(const OperatorM& op, const Ket& ket) {
  if (!(op.layout == ket.layout))
    throw std::invalid_argument("apply: operator and state layouts differ");
  return Ket{ket.layout, op.entries * ket.amplitudes};
}

DensityOp conjugate(const OperatorM& op, const DensityOp& rho) {
  if (!(op.layout == rho.layout))
    throw std::invalid_argument("conjugate: operator and state layouts differ");
  return DensityOp{rho.layout, op.entries * rho.entries * op.entries.adjoint()};
}

double fidelity(const Ket& a, const Ket& b) {
  if (!(a.layout == b.layout))
    throw std::invalid_argument("fidelity: layouts differ");
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

double fidelity(const Ket& ideal, const DensityOp& rho) {
  if (!(ideal.layout == rho.layout))
    throw std::invalid_argument("fidelity: layouts differ");
  return (ideal.amplitudes.adjoint() * rho.entries * ideal.amplitudes)(0).real();
}

double population(const Ket& ket, std::string_view slot_label, int digit) {
  const int pos = ket.layout.slot_index(slot_label);
  const Slot& s = ket.layout.slot(pos);
  if (digit < 0 || digit >= s.radix)
    throw std::invalid_argument("population: digit out of range for slot '" + s.label + "'");
  // Stride arithmetic instead of per-index digit decoding.
  int below = 1;
  for (int i = pos + 1; i < ket.layout.slot_count(); ++i) below *= ket.layout.slot(i).radix;
  double total = 0.0;
  for (int i = 0; i < ket.layout.dimension(); ++i)
    if ((i / below) % s.radix == digit) total += std::norm(ket.amplitudes(i));
  return total;
}

double mean_photon_number(const Ket& ket) {
  const Slot& cav = ket.layout.cavity();
  double mean = 0.0;
  for (int n = 1; n < cav.radix; ++n)
    mean += static_cast<double>(n) * population(ket, cav.label, n);
  return mean;
}

}  // namespace dotcavity
