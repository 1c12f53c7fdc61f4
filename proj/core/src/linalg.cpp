#include "entnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entnet/error.hpp"
#include "entnet/tolerances.hpp"

namespace entnet::linalg {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> data) {
  for (const auto& z : data) {
    if (!is_finite(z)) {
      throw InvariantViolation("matrix entry is not finite");
    }
  }
}

std::string dims(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  require_finite(data_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.data());
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  std::vector<Complex> c(diag.begin(), diag.end());
  return diagonal(std::span<const Complex>(c));
}

CMatrix CMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  CMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  require_finite(m.data());
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("cannot add " + dims(*this) + " and " + dims(other));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("cannot subtract " + dims(other) + " from " + dims(*this));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  if (!is_finite(s)) {
    throw InvariantViolation("scalar is not finite");
  }
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + dims(a) + " times " + dims(b));
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<Complex> apply(const CMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) {
    throw DimensionError("apply: " + dims(a) + " on vector of length " +
                         std::to_string(v.size()));
  }
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  }
  return c;
}

CMatrix conj(const CMatrix& a) {
  CMatrix c = a;
  for (auto& z : c.data()) z = std::conj(z);
  return c;
}

Complex trace(const CMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("trace of non-square " + dims(a));
  }
  Complex acc{};
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

CMatrix partial_trace(const CMatrix& rho, int qubit_count, std::span<const int> keep) {
  if (qubit_count <= 0 || qubit_count > 20) {
    throw DimensionError("partial_trace: qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw DimensionError("partial_trace: " + dims(rho) + " is not a " +
                         std::to_string(qubit_count) + "-qubit operator");
  }
  if (keep.empty()) {
    throw DimensionError("partial_trace: keep set is empty");
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw DimensionError("partial_trace: duplicate qubit in keep set");
  }
  if (kept.front() < 1 || kept.back() > qubit_count) {
    throw DimensionError("partial_trace: qubit index out of range");
  }

  // Bit position (from the least significant end) of each kept and traced
  // qubit. Qubit q sits at bit qubit_count - q.
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
  for (int q = 1; q <= qubit_count; ++q) {
    const int bit = qubit_count - q;
    if (std::binary_search(kept.begin(), kept.end(), q)) {
      kept_bits.push_back(bit);
    } else {
      traced_bits.push_back(bit);
    }
  }
  const auto scatter = [](std::size_t value, const std::vector<int>& bits) {
    // bits[0] receives the most significant bit of value
    std::size_t out = 0;
    const std::size_t n = bits.size();
    for (std::size_t k = 0; k < n; ++k) {
      if ((value >> (n - 1 - k)) & 1U) out |= std::size_t{1} << bits[k];
    }
    return out;
  };

  const std::size_t kdim = std::size_t{1} << kept_bits.size();
  const std::size_t tdim = std::size_t{1} << traced_bits.size();
  std::vector<std::size_t> kept_index(kdim);
  std::vector<std::size_t> traced_index(tdim);
  for (std::size_t a = 0; a < kdim; ++a) kept_index[a] = scatter(a, kept_bits);
  for (std::size_t e = 0; e < tdim; ++e) traced_index[e] = scatter(e, traced_bits);

  CMatrix out(kdim, kdim);
  for (std::size_t a = 0; a < kdim; ++a) {
    for (std::size_t b = 0; b < kdim; ++b) {
      Complex acc{};
      for (std::size_t e = 0; e < tdim; ++e) {
        acc += rho(kept_index[a] | traced_index[e], kept_index[b] | traced_index[e]);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: " + dims(a) + " vs " + dims(b));
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  }
  return m;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double hermiticity_defect(const CMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("hermiticity_defect of non-square " + dims(a));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return m;
}

HermitianEigen eig_hermitian(const CMatrix& input) {
  if (!input.is_square()) {
    throw DimensionError("eig_hermitian of non-square " + dims(input));
  }
  require_finite(input.data());
  const double defect = hermiticity_defect(input);
  if (!(defect <= tol::kHermitian)) {
    throw InvariantViolation("eig_hermitian: input deviates from Hermitian by " +
                             std::to_string(defect));
  }

  const std::size_t n = input.rows();
  // Work on the exactly Hermitian part.
  CMatrix a = input;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  CMatrix v = CMatrix::identity(n);

  // Iterate on a / max|a_ij| so norms cannot overflow and the stopping rule
  // is the same at every scale.
  const double scale = max_abs(a);
  if (scale > 0.0) a *= 1.0 / scale;
  const double threshold = tol::kJacobiOffDiagonal * frobenius_norm(a);
  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    }
    return std::sqrt(s);
  };

  bool converged = off_norm() <= threshold;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g < 1e-300) continue;
        const Complex phase = a(p, q) / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real symmetric rotation on [[app, g], [g, aqq]] after removing the
        // phase with diag(1, e^{-i phi}).
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Column rotation G (acts on columns p, q):
        //   G_pp = c, G_pq = s, G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * g;
        a(q, q) = aqq + t * g;
      }
    }
    converged = off_norm() <= threshold;
  }
  if (!converged) {
    throw ConvergenceError("eig_hermitian: Jacobi did not converge within " +
                           std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real() * (scale > 0.0 ? scale : 1.0);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

HermitianPropagator::HermitianPropagator(const CMatrix& h) : eig_(eig_hermitian(h)) {}

CMatrix HermitianPropagator::at(double t) const {
  const std::size_t n = eig_.values.size();
  std::vector<Complex> phases(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = -eig_.values[k] * t;
    if (!std::isfinite(angle)) {
      throw InvariantViolation("propagator phase is not finite");
    }
    phases[k] = std::polar(1.0, angle);
  }
  // V diag(phases) V^dagger
  const CMatrix& v = eig_.vectors;
  CMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * phases[k] * std::conj(v(j, k));
      u(i, j) = acc;
    }
  }
  return u;
}

CMatrix expm_hermitian_scaled(const CMatrix& h, double t) {
  return HermitianPropagator(h).at(t);
}

CMatrix sqrtm_psd(const CMatrix& a) {
  const HermitianEigen eig = eig_hermitian(a);
  const std::size_t n = eig.values.size();
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (lambda < -tol::kNegativeEigen) {
      throw InvariantViolation("sqrtm_psd: eigenvalue " + std::to_string(lambda) +
                               " is below the PSD tolerance");
    }
    roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  const CMatrix& v = eig.vectors;
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += v(i, k) * roots[k] * std::conj(v(j, k));
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace entnet::linalg
