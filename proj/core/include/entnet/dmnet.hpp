#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "entnet/linalg.hpp"
#include "entnet/qstate.hpp"

namespace entnet::dmnet {

using linalg::CMatrix;
using qstate::Axis;
using qstate::BellKind;
using qstate::DensityOperator;
using qstate::StateVector;

/// DM strength vector (D_x, D_y, D_z), energy units with hbar = 1.
struct DMVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const DMVector&, const DMVector&) = default;
};

/// H = D . (sigma_i x tau_j) between qubits (first, second), 1-based.
class DMCoupling {
 public:
  DMCoupling(DMVector strength, int first, int second);

  /// Single-axis coupling; keeps the axis even when strength is zero.
  static DMCoupling along(Axis axis, double strength, int first, int second);

  const DMVector& strength() const noexcept { return strength_; }
  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

  /// The axis if at most one component is nonzero, otherwise nullopt.
  std::optional<Axis> single_axis() const noexcept;
  /// Signed strength along single_axis(); 0 for a general vector.
  double axis_strength() const noexcept;

  friend bool operator==(const DMCoupling&, const DMCoupling&) = default;

 private:
  DMVector strength_;
  int first_;
  int second_;
  std::optional<Axis> declared_axis_;
};

enum class Method { analytic, oracle };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// Hermitian 2^n operator D_x(s_y t_z - s_z t_y) + D_y(s_z t_x - s_x t_z)
/// + D_z(s_x t_y - s_y t_x) with sigma on c.first() and tau on c.second().
CMatrix dm_hamiltonian(const DMCoupling& c, int qubit_count);

/// Closed form cos^2(Dt) + sin^2(Dt) A_i A_j - (i/2) sin(2Dt) G_ij with A
/// the coupling axis Pauli and G = H / D. Single-axis couplings only;
/// throws ArgumentError otherwise.
CMatrix unitary_analytic(const DMCoupling& c, double t, int qubit_count);

/// U(t) = exp(-i H t) for one coupling on a fixed register, prepared once
/// and evaluated at many times.
class CouplingPropagator {
 public:
  CouplingPropagator(const DMCoupling& c, int qubit_count, Method method);

  CMatrix unitary(double t) const;
  StateVector apply(const StateVector& psi, double t) const;

  const DMCoupling& coupling() const noexcept { return coupling_; }
  int qubit_count() const noexcept { return qubit_count_; }
  Method method() const noexcept { return method_; }

 private:
  struct AnalyticTerms {
    double strength;
    CMatrix identity;
    CMatrix axis_product;  // A_i A_j
    CMatrix generator;     // H / D
  };

  static std::variant<AnalyticTerms, linalg::HermitianPropagator> prepare(const DMCoupling& c,
                                                                         int qubit_count,
                                                                         Method method);

  DMCoupling coupling_;
  int qubit_count_;
  Method method_;
  std::variant<AnalyticTerms, linalg::HermitianPropagator> impl_;
};

struct EvolutionStep {
  DMCoupling coupling;
  double t;
  Method method;
  /// Bell pair appended just before this step (network growth).
  std::optional<BellKind> appended;
};

/// Pure global network state plus the sequence of operations that produced
/// it. Values are immutable; evolve and grow return new states.
class NetworkState {
 public:
  NetworkState(StateVector psi, std::vector<BellKind> pairs, std::vector<EvolutionStep> history);

  const StateVector& psi() const noexcept { return psi_; }
  int node_count() const noexcept { return psi_.qubit_count(); }
  const std::vector<BellKind>& pairs() const noexcept { return pairs_; }
  const std::vector<EvolutionStep>& history() const noexcept { return history_; }

 private:
  StateVector psi_;
  std::vector<BellKind> pairs_;
  std::vector<EvolutionStep> history_;
};

/// Tensor product of Bell pairs; pair k occupies nodes 2k-1, 2k.
NetworkState initial_network(std::span<const BellKind> pairs);

NetworkState evolve(const NetworkState& net, const DMCoupling& c, double t,
                    Method method = Method::oracle);
/// Same as evolve with a prepared propagator (sweeps reuse one).
NetworkState evolve(const NetworkState& net, const CouplingPropagator& u, double t);

/// Append a Bell pair and evolve under a coupling that must join the last
/// old node to the first new node.
NetworkState grow(const NetworkState& net, BellKind new_pair, const DMCoupling& c, double t,
                  Method method = Method::oracle);
/// Same as grow with a propagator prepared on the enlarged register.
NetworkState grow(const NetworkState& net, BellKind new_pair, const CouplingPropagator& u, double t);

DensityOperator reduced(const NetworkState& net, std::span<const int> keep);
DensityOperator reduced(const NetworkState& net, std::initializer_list<int> keep);

}  // namespace entnet::dmnet
