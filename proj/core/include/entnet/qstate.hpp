#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "entnet/linalg.hpp"

namespace entnet::qstate {

using linalg::CMatrix;
using linalg::Complex;

enum class Axis { x, y, z };

/// Bell pairs in the network's convention: phi+- = (|11> +- |00>)/sqrt2,
/// psi+- = (|10> +- |01>)/sqrt2.
enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

std::string_view to_string(Axis axis);
std::string_view to_string(BellKind kind);
Axis parse_axis(std::string_view text);
BellKind parse_bell(std::string_view text);

/// Normalized pure state over qubit_count qubits. Basis index
/// q1*2^(n-1) + ... + qn, qubit 1 most significant.
class StateVector {
 public:
  /// Throws InvariantViolation unless the norm is 1 within tol::kNorm.
  StateVector(int qubit_count, std::vector<Complex> amplitudes);

  /// Computational basis state |index>.
  static StateVector basis(int qubit_count, std::size_t index);

  int qubit_count() const noexcept { return qubit_count_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  int qubit_count_;
  std::vector<Complex> amplitudes_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
 public:
  /// Validates all three invariants; throws InvariantViolation otherwise.
  explicit DensityOperator(CMatrix matrix);

  int qubit_count() const noexcept { return qubit_count_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

 private:
  int qubit_count_;
  CMatrix matrix_;
};

StateVector bell_state(BellKind kind);

CMatrix pauli(Axis axis);
CMatrix hadamard();
/// 2-qubit CNOT, first qubit controls.
CMatrix cnot();

/// Lift `op` to a qubit_count register: op acts on `targets` (1-based, in the
/// given order; targets[0] is op's most significant qubit), identity
/// elsewhere. Targets need not be adjacent or ascending.
CMatrix embed(const CMatrix& op, std::span<const int> targets, int qubit_count);

DensityOperator density_from(const StateVector& psi);

/// Tr rho^2
double purity(const DensityOperator& rho);

/// 1-qubit Bloch vector (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z).
std::array<double, 3> bloch_vector(const DensityOperator& rho);

/// Tensor product of one-qubit operators applied to every qubit (used for
/// local-unitary checks). ops.size() is the qubit count.
CMatrix local_product(std::span<const CMatrix> ops);

}  // namespace entnet::qstate
