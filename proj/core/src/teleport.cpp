#include "entnet/teleport.hpp"

#include <cmath>

#include "entnet/error.hpp"
#include "entnet/tolerances.hpp"

namespace entnet::teleport {

namespace {

using linalg::CMatrix;
using qstate::Axis;

constexpr BellKind kOutcomeOrder[4] = {BellKind::phi_plus, BellKind::psi_plus,
                                       BellKind::phi_minus, BellKind::psi_minus};

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// (H ⊗ 1 ⊗ 1)(CNOT ⊗ 1) on (input, sender, receiver).
const CMatrix& sender_circuit() {
  static const CMatrix u = linalg::matmul(
      linalg::kron(qstate::hadamard(), CMatrix::identity(4)),
      linalg::kron(qstate::cnot(), CMatrix::identity(2)));
  return u;
}

}  // namespace

UnknownQubit::UnknownQubit(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol::kNorm) {
    throw InvariantViolation("unknown qubit is not normalized");
  }
}

UnknownQubit UnknownQubit::from_alpha2(double alpha2) {
  if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
    throw ArgumentError("|alpha|^2 must lie in [0, 1]");
  }
  return UnknownQubit(std::sqrt(alpha2), std::sqrt(1.0 - alpha2));
}

UnknownQubit UnknownQubit::sample_uniform(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Complex a;
  Complex b;
  double norm = 0.0;
  do {
    a = {gauss(rng), gauss(rng)};
    b = {gauss(rng), gauss(rng)};
    norm = std::sqrt(std::norm(a) + std::norm(b));
  } while (norm < 1e-12);
  return UnknownQubit(a / norm, b / norm);
}

std::array<UnknownQubit, 6> UnknownQubit::octahedron() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  return {UnknownQubit(1.0, 0.0),    UnknownQubit(0.0, 1.0),     UnknownQubit(h, h),
          UnknownQubit(h, -h),       UnknownQubit(h, i * h),     UnknownQubit(h, -i * h)};
}

std::array<double, 3> UnknownQubit::bloch() const noexcept {
  const Complex ab = std::conj(alpha_) * beta_;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(alpha_) - std::norm(beta_)};
}

DensityOperator UnknownQubit::density() const {
  const Complex amps[2] = {alpha_, beta_};
  return DensityOperator(CMatrix::outer(amps, amps));
}

double fidelity_standard(const UnknownQubit& input, const DensityOperator& output) {
  return 0.5 * (1.0 + dot(input.bloch(), qstate::bloch_vector(output)));
}

double fidelity_paper(const UnknownQubit& input, const DensityOperator& output) {
  return 0.25 * (1.0 + dot(input.bloch(), qstate::bloch_vector(output)));
}

std::vector<TeleportOutcome> teleport(const DensityOperator& channel, const UnknownQubit& input,
                                      Corrections corrections) {
  if (channel.qubit_count() != 2) {
    throw DimensionError("teleportation channel must be a two-qubit state");
  }
  const CMatrix& u = sender_circuit();
  const CMatrix joint = linalg::kron(input.density().matrix(), channel.matrix());
  const CMatrix evolved = linalg::matmul(linalg::matmul(u, joint), linalg::adjoint(u));

  const CMatrix x = qstate::pauli(Axis::x);
  const CMatrix z = qstate::pauli(Axis::z);
  std::vector<TeleportOutcome> outcomes;
  outcomes.reserve(4);
  for (std::size_t m = 0; m < 4; ++m) {
    // basis index of (input, sender, receiver) = 2 m + r
    CMatrix block(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) block(r, c) = evolved(2 * m + r, 2 * m + c);
    }
    double p = linalg::trace(block).real();
    if (p < tol::kBranchProbability) {
      p = std::max(p, 0.0);
      DensityOperator mixed(0.5 * CMatrix::identity(2));
      outcomes.push_back(
          {kOutcomeOrder[m], p, mixed, fidelity_paper(input, mixed), fidelity_standard(input, mixed)});
      continue;
    }
    block *= 1.0 / p;
    if (corrections == Corrections::on) {
      CMatrix fix = CMatrix::identity(2);
      if (m & 1U) fix = linalg::matmul(x, fix);
      if (m & 2U) fix = linalg::matmul(z, fix);
      block = linalg::matmul(linalg::matmul(fix, block), linalg::adjoint(fix));
    }
    block = 0.5 * (block + linalg::adjoint(block));
    DensityOperator out(std::move(block));
    const double fp = fidelity_paper(input, out);
    const double fs = fidelity_standard(input, out);
    outcomes.push_back({kOutcomeOrder[m], p, std::move(out), fp, fs});
  }
  return outcomes;
}

double average_fidelity(const std::vector<TeleportOutcome>& outcomes) {
  double f = 0.0;
  for (const auto& o : outcomes) f += o.probability * o.fidelity_standard;
  return f;
}

double average_fidelity_paper(const std::vector<TeleportOutcome>& outcomes) {
  double f = 0.0;
  for (const auto& o : outcomes) f += o.probability * o.fidelity_paper;
  return f;
}

double input_averaged_fidelity(const DensityOperator& channel, Corrections corrections) {
  double f = 0.0;
  const auto inputs = UnknownQubit::octahedron();
  for (const auto& in : inputs) f += average_fidelity(teleport(channel, in, corrections));
  return f / static_cast<double>(inputs.size());
}

DensityOperator channel_for_route(const dmnet::NetworkState& net, entmeas::NodePair route) {
  if (route.first == route.second) {
    throw ArgumentError("teleportation route needs two distinct nodes");
  }
  auto rho = dmnet::reduced(net, {route.first, route.second});
  if (route.first < route.second) return rho;
  const CMatrix swap{{1.0, 0.0, 0.0, 0.0},
                     {0.0, 0.0, 1.0, 0.0},
                     {0.0, 1.0, 0.0, 0.0},
                     {0.0, 0.0, 0.0, 1.0}};
  return DensityOperator(linalg::matmul(linalg::matmul(swap, rho.matrix()), swap));
}

SweepResult fidelity_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                            std::span<const double> t_grid, entmeas::NodePair route,
                            const UnknownQubit& input, dmnet::Method method,
                            FidelityOptions options) {
  entmeas::validate_grid(t_grid);
  if (route.first < 1 || route.second < 1 || route.first > net0.node_count() ||
      route.second > net0.node_count() || route.first == route.second) {
    throw ArgumentError("invalid teleportation route");
  }
  SweepResult result({entmeas::pair_label("F", route, c)});
  const dmnet::CouplingPropagator u(c, net0.node_count(), method);
  for (const double t : t_grid) {
    const auto channel = channel_for_route(dmnet::evolve(net0, u, t), route);
    const double f = options.input_average
                         ? input_averaged_fidelity(channel, options.corrections)
                         : average_fidelity(teleport(channel, input, options.corrections));
    result.add_row(t, {f});
  }
  return result;
}

}  // namespace entnet::teleport
