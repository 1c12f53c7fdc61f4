#include "entnet/entmeas.hpp"

#include <algorithm>
#include <cmath>

#include "entnet/error.hpp"
#include "entnet/tolerances.hpp"

namespace entnet::entmeas {

namespace {

CMatrix yy() {
  return linalg::kron(qstate::pauli(qstate::Axis::y), qstate::pauli(qstate::Axis::y));
}

void require_two_qubits(const DensityOperator& rho) {
  if (rho.qubit_count() != 2) {
    throw DimensionError("concurrence needs a two-qubit state, got " +
                         std::to_string(rho.qubit_count()) + " qubits");
  }
}

void require_pair(const dmnet::NetworkState& net, NodePair p) {
  if (p.first == p.second || p.first < 1 || p.second < 1 || p.first > net.node_count() ||
      p.second > net.node_count()) {
    throw ArgumentError("invalid node pair " + std::to_string(p.first) + "-" +
                        std::to_string(p.second));
  }
}

}  // namespace

CMatrix spin_flip(const DensityOperator& rho) {
  require_two_qubits(rho);
  const CMatrix flip = yy();
  return linalg::matmul(linalg::matmul(flip, linalg::conj(rho.matrix())), flip);
}

double concurrence(const DensityOperator& rho) {
  require_two_qubits(rho);
  // R = sqrt(sqrt(rho) rho~ sqrt(rho)) has the singular values of
  // B = sqrt(rho) (Y x Y) conj(sqrt(rho)) as eigenvalues. Reading them off the
  // Hermitian dilation [[0, B], [B^dag, 0]] keeps absolute accuracy where a
  // second square root would amplify roundoff in the small eigenvalues.
  const CMatrix root = linalg::sqrtm_psd(rho.matrix());
  const CMatrix b = linalg::matmul(linalg::matmul(root, yy()), linalg::conj(root));
  CMatrix dilation(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = b(i, j);
      dilation(4 + j, i) = std::conj(b(i, j));
    }
  }
  const auto eig = linalg::eig_hermitian(dilation);
  std::vector<double> roots(eig.values.begin(), eig.values.begin() + 4);
  for (auto& v : roots) {
    if (v < tol::kSqrtEigenFloor) v = 0.0;
  }
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

double min_concurrence(const dmnet::NetworkState& net) {
  double norm2 = 0.0;
  for (const auto& a : net.psi().amplitudes()) norm2 += std::norm(a);
  const double global_purity = norm2 * norm2;
  if (global_purity < 1.0 - tol::kGlobalPurity) {
    throw InvariantViolation("network state is not pure (purity " +
                             std::to_string(global_purity) + ")");
  }
  const int n = net.node_count();
  double sum = 0.0;
  for (int q = 1; q <= n; ++q) {
    sum += qstate::purity(dmnet::reduced(net, {q}));
  }
  return std::sqrt(std::max(0.0, 1.0 - sum / n));
}

std::string axis_suffix(const dmnet::DMCoupling& c) {
  const auto axis = c.single_axis();
  return axis ? std::string(qstate::to_string(*axis)) : std::string();
}

std::string pair_label(std::string_view prefix, NodePair pair, const dmnet::DMCoupling& c) {
  std::string label(prefix);
  label += '_';
  if (pair.first < 10 && pair.second < 10) {
    label += std::to_string(pair.first) + std::to_string(pair.second);
  } else {
    label += std::to_string(pair.first) + "-" + std::to_string(pair.second);
  }
  return label + axis_suffix(c);
}

void validate_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) {
    throw ArgumentError("time grid is empty");
  }
  if (t_grid.front() != 0.0) {
    throw ArgumentError("time grid must start at 0");
  }
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k - 1]) || !std::isfinite(t_grid[k])) {
      throw ArgumentError("time grid must be finite and strictly increasing");
    }
  }
}

SweepResult concurrence_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                               std::span<const double> t_grid, std::span<const NodePair> pairs,
                               dmnet::Method method) {
  validate_grid(t_grid);
  if (pairs.empty()) {
    throw ArgumentError("no node pairs requested");
  }
  std::vector<std::string> names;
  for (const auto& p : pairs) {
    require_pair(net0, p);
    names.push_back(pair_label("C", p, c));
  }
  SweepResult result(std::move(names));
  const dmnet::CouplingPropagator u(c, net0.node_count(), method);
  for (const double t : t_grid) {
    const auto net = dmnet::evolve(net0, u, t);
    std::vector<double> row;
    row.reserve(pairs.size());
    for (const auto& p : pairs) {
      row.push_back(concurrence(dmnet::reduced(net, {p.first, p.second})));
    }
    result.add_row(t, std::move(row));
  }
  return result;
}

SweepResult min_concurrence_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                                   std::span<const double> t_grid, dmnet::Method method) {
  validate_grid(t_grid);
  const std::string suffix = axis_suffix(c);
  SweepResult result({suffix.empty() ? std::string("Cmin") : "Cmin_" + suffix});
  const dmnet::CouplingPropagator u(c, net0.node_count(), method);
  for (const double t : t_grid) {
    result.add_row(t, {min_concurrence(dmnet::evolve(net0, u, t))});
  }
  return result;
}

}  // namespace entnet::entmeas
