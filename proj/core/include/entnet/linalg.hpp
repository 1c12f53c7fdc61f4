#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entnet::linalg {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite; the
/// constructors reject NaN/Inf.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  /// Row-wise literal, e.g. CMatrix{{0, 1}, {1, 0}}.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> diag);
  static CMatrix diagonal(std::span<const double> diag);
  /// |v><w|
  static CMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
/// Matrix-vector product.
std::vector<Complex> apply(const CMatrix& a, std::span<const Complex> v);
/// Kronecker product; a's indices are the most significant.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
/// Elementwise complex conjugate.
CMatrix conj(const CMatrix& a);
Complex trace(const CMatrix& a);

/// Reduced operator on the qubits in `keep` (1-based labels, qubit 1 is the
/// most significant bit). The result orders kept qubits ascending.
CMatrix partial_trace(const CMatrix& rho, int qubit_count, std::span<const int> keep);

double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);
/// max |a_ij - conj(a_ji)|
double hermiticity_defect(const CMatrix& a);

struct HermitianEigen {
  std::vector<double> values;  ///< descending
  CMatrix vectors;             ///< column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws DimensionError for non-square input,
/// InvariantViolation if `a` is not Hermitian within tol::kHermitian, and
/// ConvergenceError if the sweep cap is hit.
HermitianEigen eig_hermitian(const CMatrix& a);

/// Cached spectral decomposition of a Hermitian generator; at(t) returns
/// exp(-i h t). Reusing one instance across a time grid avoids repeated
/// diagonalization.
class HermitianPropagator {
 public:
  explicit HermitianPropagator(const CMatrix& h);
  CMatrix at(double t) const;
  const HermitianEigen& spectrum() const noexcept { return eig_; }

 private:
  HermitianEigen eig_;
};

/// exp(-i h t) for Hermitian h.
CMatrix expm_hermitian_scaled(const CMatrix& h, double t);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol::kNegativeEigen, 0) are clamped; more negative ones throw
/// InvariantViolation.
CMatrix sqrtm_psd(const CMatrix& a);

}  // namespace entnet::linalg
