#pragma once

#include <array>
#include <random>
#include <vector>

#include "entnet/dmnet.hpp"
#include "entnet/entmeas.hpp"
#include "entnet/qstate.hpp"
#include "entnet/sweep.hpp"

namespace entnet::teleport {

using linalg::Complex;
using qstate::BellKind;
using qstate::DensityOperator;

/// Pure input alpha|0> + beta|1> held by the sender.
class UnknownQubit {
 public:
  UnknownQubit(Complex alpha, Complex beta);

  /// Real amplitudes alpha = sqrt(alpha2), beta = sqrt(1 - alpha2).
  static UnknownQubit from_alpha2(double alpha2);
  /// Haar-uniform pure state.
  static UnknownQubit sample_uniform(std::mt19937_64& rng);
  /// The six +-x, +-y, +-z eigenstates. They form a spherical 2-design, so
  /// averaging a fidelity over them equals the uniform average exactly.
  static std::array<UnknownQubit, 6> octahedron();

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }
  /// (s_x, s_y, s_z) = (2 Re(alpha* beta), 2 Im(alpha* beta), |alpha|^2 - |beta|^2)
  std::array<double, 3> bloch() const noexcept;
  DensityOperator density() const;

 private:
  Complex alpha_;
  Complex beta_;
};

enum class Corrections { on, off };

struct TeleportOutcome {
  BellKind bell_outcome;
  double probability;
  DensityOperator output_state;
  double fidelity_paper;
  double fidelity_standard;
};

/// Standard protocol: input (qubit a) ⊗ channel (sender s, receiver r);
/// CNOT a->s, Hadamard on a, then all four (a, s) measurement branches with
/// exact probabilities. With corrections on, branch (m_a, m_s) applies
/// Z^m_a X^m_s to the receiver. Returns branches in the order phi+, psi+,
/// phi-, psi- (measurement results 00, 01, 10, 11).
std::vector<TeleportOutcome> teleport(const DensityOperator& channel, const UnknownQubit& input,
                                      Corrections corrections = Corrections::on);

/// 1/2 (1 + s_u . s_t)
double fidelity_standard(const UnknownQubit& input, const DensityOperator& output);
/// 1/4 (1 + s_u . s_t), kept for side-by-side reporting only.
double fidelity_paper(const UnknownQubit& input, const DensityOperator& output);

/// Probability-weighted fidelity over the branches.
double average_fidelity(const std::vector<TeleportOutcome>& outcomes);
double average_fidelity_paper(const std::vector<TeleportOutcome>& outcomes);

/// Branch-averaged fidelity further averaged over all pure inputs (exact,
/// via the octahedron design).
double input_averaged_fidelity(const DensityOperator& channel,
                               Corrections corrections = Corrections::on);

/// Two-node channel with the sender's qubit first: reduced(net, route),
/// reordered if route.first > route.second.
DensityOperator channel_for_route(const dmnet::NetworkState& net, entmeas::NodePair route);

struct FidelityOptions {
  Corrections corrections = Corrections::on;
  /// Average over all inputs instead of using the fixed one.
  bool input_average = false;
};

/// Column F_<route><axis>: branch-averaged standard fidelity through the
/// evolving channel at each t.
SweepResult fidelity_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                            std::span<const double> t_grid, entmeas::NodePair route,
                            const UnknownQubit& input,
                            dmnet::Method method = dmnet::Method::oracle,
                            FidelityOptions options = {});

}  // namespace entnet::teleport
