#include "entnet/qstate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "entnet/error.hpp"
#include "entnet/tolerances.hpp"

namespace entnet::qstate {

namespace {

int qubits_for_dim(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return (std::size_t{1} << n) == dim ? n : -1;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::phi_plus: return "phi_plus";
    case BellKind::phi_minus: return "phi_minus";
    case BellKind::psi_plus: return "psi_plus";
    case BellKind::psi_minus: return "psi_minus";
  }
  return "?";
}

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::x;
  if (text == "y") return Axis::y;
  if (text == "z") return Axis::z;
  throw ArgumentError("unknown axis '" + std::string(text) + "'");
}

BellKind parse_bell(std::string_view text) {
  for (auto kind : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
                    BellKind::psi_minus}) {
    if (text == to_string(kind)) return kind;
  }
  throw ArgumentError("unknown Bell state '" + std::string(text) + "'");
}

StateVector::StateVector(int qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  if (qubit_count <= 0 || qubit_count > 20) {
    throw DimensionError("state vector qubit count out of range");
  }
  if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
    throw DimensionError("state vector needs 2^" + std::to_string(qubit_count) +
                         " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvariantViolation("state vector amplitude is not finite");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > tol::kNorm) {
    throw InvariantViolation("state vector is not normalized (norm " +
                             std::to_string(std::sqrt(norm2)) + ")");
  }
}

StateVector StateVector::basis(int qubit_count, std::size_t index) {
  if (qubit_count <= 0 || qubit_count > 20 || index >= (std::size_t{1} << qubit_count)) {
    throw DimensionError("basis index out of range");
  }
  std::vector<Complex> amps(std::size_t{1} << qubit_count);
  amps[index] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes()) {
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  }
  return StateVector(a.qubit_count() + b.qubit_count(), std::move(amps));
}

DensityOperator::DensityOperator(CMatrix matrix) : qubit_count_(0), matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) {
    throw DimensionError("density operator must be square");
  }
  qubit_count_ = qubits_for_dim(matrix_.rows());
  if (qubit_count_ <= 0) {
    throw DimensionError("density operator dimension is not a power of two");
  }
  const double defect = linalg::hermiticity_defect(matrix_);
  if (defect > tol::kHermitian) {
    throw InvariantViolation("density operator is not Hermitian (defect " +
                             std::to_string(defect) + ")");
  }
  const Complex tr = linalg::trace(matrix_);
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kTrace) {
    throw InvariantViolation("density operator trace is " + std::to_string(tr.real()));
  }
  const auto eig = linalg::eig_hermitian(matrix_);
  if (eig.values.back() < -tol::kNegativeEigen) {
    throw InvariantViolation("density operator has eigenvalue " +
                             std::to_string(eig.values.back()));
  }
}

StateVector bell_state(BellKind kind) {
  // basis order |00>, |01>, |10>, |11>
  switch (kind) {
    case BellKind::phi_plus: return StateVector(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    case BellKind::phi_minus: return StateVector(2, {-kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    case BellKind::psi_plus: return StateVector(2, {0.0, kInvSqrt2, kInvSqrt2, 0.0});
    case BellKind::psi_minus: return StateVector(2, {0.0, -kInvSqrt2, kInvSqrt2, 0.0});
  }
  throw ArgumentError("unknown Bell state");
}

CMatrix pauli(Axis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::x: return CMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Axis::y: return CMatrix{{0.0, -i}, {i, 0.0}};
    case Axis::z: return CMatrix{{1.0, 0.0}, {0.0, -1.0}};
  }
  throw ArgumentError("unknown axis");
}

CMatrix hadamard() {
  return CMatrix{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

CMatrix cnot() {
  return CMatrix{{1.0, 0.0, 0.0, 0.0},
                 {0.0, 1.0, 0.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0},
                 {0.0, 0.0, 1.0, 0.0}};
}

CMatrix embed(const CMatrix& op, std::span<const int> targets, int qubit_count) {
  if (qubit_count <= 0 || qubit_count > 20) {
    throw DimensionError("embed: qubit count out of range");
  }
  if (targets.empty() || static_cast<int>(targets.size()) > qubit_count) {
    throw DimensionError("embed: bad target count");
  }
  const std::size_t k = targets.size();
  if (op.rows() != (std::size_t{1} << k) || op.cols() != op.rows()) {
    throw DimensionError("embed: operator dimension does not match " + std::to_string(k) +
                         " targets");
  }
  std::vector<int> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.front() < 1 || sorted.back() > qubit_count) {
    throw DimensionError("embed: targets must be distinct and within 1.." +
                         std::to_string(qubit_count));
  }

  std::size_t target_mask = 0;
  std::vector<int> bits(k);
  for (std::size_t m = 0; m < k; ++m) {
    bits[m] = qubit_count - targets[m];
    target_mask |= std::size_t{1} << bits[m];
  }
  const auto gather = [&](std::size_t index) {
    std::size_t local = 0;
    for (std::size_t m = 0; m < k; ++m) {
      local = (local << 1) | ((index >> bits[m]) & 1U);
    }
    return local;
  };

  const std::size_t dim = std::size_t{1} << qubit_count;
  CMatrix out(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t r_local = gather(row);
    const std::size_t rest = row & ~target_mask;
    for (std::size_t col = 0; col < dim; ++col) {
      if ((col & ~target_mask) != rest) continue;
      out(row, col) = op(r_local, gather(col));
    }
  }
  return out;
}

DensityOperator density_from(const StateVector& psi) {
  return DensityOperator(CMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

double purity(const DensityOperator& rho) {
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho
  double s = 0.0;
  for (const auto& z : rho.matrix().data()) s += std::norm(z);
  return s;
}

std::array<double, 3> bloch_vector(const DensityOperator& rho) {
  if (rho.qubit_count() != 1) {
    throw DimensionError("bloch_vector needs a one-qubit operator");
  }
  const CMatrix& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

CMatrix local_product(std::span<const CMatrix> ops) {
  if (ops.empty()) {
    throw DimensionError("local_product: no operators");
  }
  CMatrix out = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) out = linalg::kron(out, ops[k]);
  return out;
}

}  // namespace entnet::qstate
