#include "entnet/dmnet.hpp"

#include <cmath>
#include <string>

#include "entnet/error.hpp"

namespace entnet::dmnet {

namespace {

using linalg::Complex;

void require_finite(const DMVector& d) {
  if (!std::isfinite(d.x) || !std::isfinite(d.y) || !std::isfinite(d.z)) {
    throw ArgumentError("DM strength must be finite");
  }
}

void require_in_register(const DMCoupling& c, int qubit_count) {
  if (c.first() > qubit_count || c.second() > qubit_count) {
    throw DimensionError("coupling (" + std::to_string(c.first()) + "," +
                         std::to_string(c.second()) + ") outside a " +
                         std::to_string(qubit_count) + "-qubit register");
  }
}

CMatrix pair_product(Axis a, Axis b, const DMCoupling& c, int n) {
  const int targets[] = {c.first(), c.second()};
  return qstate::embed(linalg::kron(qstate::pauli(a), qstate::pauli(b)), targets, n);
}

/// (sigma x tau) component along `axis`, embedded on the coupling pair.
CMatrix cross_component(Axis axis, const DMCoupling& c, int n) {
  switch (axis) {
    case Axis::x: return pair_product(Axis::y, Axis::z, c, n) - pair_product(Axis::z, Axis::y, c, n);
    case Axis::y: return pair_product(Axis::z, Axis::x, c, n) - pair_product(Axis::x, Axis::z, c, n);
    case Axis::z: return pair_product(Axis::x, Axis::y, c, n) - pair_product(Axis::y, Axis::x, c, n);
  }
  throw ArgumentError("unknown axis");
}

}  // namespace

DMCoupling::DMCoupling(DMVector strength, int first, int second)
    : strength_(strength), first_(first), second_(second) {
  require_finite(strength_);
  if (first < 1 || second < 1) {
    throw DimensionError("coupling qubit indices are 1-based");
  }
  if (first == second) {
    throw DimensionError("coupling needs two distinct qubits");
  }
}

DMCoupling DMCoupling::along(Axis axis, double strength, int first, int second) {
  DMVector d;
  switch (axis) {
    case Axis::x: d.x = strength; break;
    case Axis::y: d.y = strength; break;
    case Axis::z: d.z = strength; break;
  }
  DMCoupling c(d, first, second);
  c.declared_axis_ = axis;
  return c;
}

std::optional<Axis> DMCoupling::single_axis() const noexcept {
  if (declared_axis_) return declared_axis_;
  const int nonzero = (strength_.x != 0.0) + (strength_.y != 0.0) + (strength_.z != 0.0);
  if (nonzero > 1) return std::nullopt;
  if (strength_.x != 0.0) return Axis::x;
  if (strength_.y != 0.0) return Axis::y;
  return Axis::z;
}

double DMCoupling::axis_strength() const noexcept {
  const auto axis = single_axis();
  if (!axis) return 0.0;
  switch (*axis) {
    case Axis::x: return strength_.x;
    case Axis::y: return strength_.y;
    case Axis::z: return strength_.z;
  }
  return 0.0;
}

std::string_view to_string(Method method) {
  return method == Method::analytic ? "analytic" : "oracle";
}

Method parse_method(std::string_view text) {
  if (text == "analytic") return Method::analytic;
  if (text == "oracle") return Method::oracle;
  throw ArgumentError("unknown method '" + std::string(text) + "'");
}

CMatrix dm_hamiltonian(const DMCoupling& c, int qubit_count) {
  require_in_register(c, qubit_count);
  const std::size_t dim = std::size_t{1} << qubit_count;
  CMatrix h = CMatrix::zeros(dim, dim);
  const DMVector& d = c.strength();
  if (d.x != 0.0) h += d.x * cross_component(Axis::x, c, qubit_count);
  if (d.y != 0.0) h += d.y * cross_component(Axis::y, c, qubit_count);
  if (d.z != 0.0) h += d.z * cross_component(Axis::z, c, qubit_count);
  return h;
}

CMatrix unitary_analytic(const DMCoupling& c, double t, int qubit_count) {
  return CouplingPropagator(c, qubit_count, Method::analytic).unitary(t);
}

CouplingPropagator::CouplingPropagator(const DMCoupling& c, int qubit_count, Method method)
    : coupling_(c), qubit_count_(qubit_count), method_(method), impl_(prepare(c, qubit_count, method)) {}

std::variant<CouplingPropagator::AnalyticTerms, linalg::HermitianPropagator>
CouplingPropagator::prepare(const DMCoupling& c, int qubit_count, Method method) {
  require_in_register(c, qubit_count);
  if (method == Method::oracle) {
    return linalg::HermitianPropagator(dm_hamiltonian(c, qubit_count));
  }
  const auto axis = c.single_axis();
  if (!axis) {
    throw ArgumentError("analytic unitary needs a single-axis coupling; use the oracle method");
  }
  const std::size_t dim = std::size_t{1} << qubit_count;
  return AnalyticTerms{c.axis_strength(), CMatrix::identity(dim),
                       pair_product(*axis, *axis, c, qubit_count),
                       cross_component(*axis, c, qubit_count)};
}

CMatrix CouplingPropagator::unitary(double t) const {
  if (const auto* prop = std::get_if<linalg::HermitianPropagator>(&impl_)) {
    return prop->at(t);
  }
  const auto& terms = std::get<AnalyticTerms>(impl_);
  const double phase = terms.strength * t;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  CMatrix u = (c * c) * terms.identity;
  u += (s * s) * terms.axis_product;
  u += Complex{0.0, -0.5 * std::sin(2.0 * phase)} * terms.generator;
  return u;
}

StateVector CouplingPropagator::apply(const StateVector& psi, double t) const {
  if (psi.qubit_count() != qubit_count_) {
    throw DimensionError("propagator register size does not match state");
  }
  return StateVector(qubit_count_, linalg::apply(unitary(t), psi.amplitudes()));
}

NetworkState::NetworkState(StateVector psi, std::vector<BellKind> pairs,
                           std::vector<EvolutionStep> history)
    : psi_(std::move(psi)), pairs_(std::move(pairs)), history_(std::move(history)) {
  if (static_cast<int>(pairs_.size()) * 2 != psi_.qubit_count()) {
    throw DimensionError("network node count must be twice the number of Bell pairs");
  }
}

NetworkState initial_network(std::span<const BellKind> pairs) {
  if (pairs.empty()) {
    throw ArgumentError("a network needs at least one Bell pair");
  }
  StateVector psi = qstate::bell_state(pairs.front());
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    psi = qstate::tensor(psi, qstate::bell_state(pairs[k]));
  }
  return NetworkState(std::move(psi), std::vector<BellKind>(pairs.begin(), pairs.end()), {});
}

NetworkState evolve(const NetworkState& net, const CouplingPropagator& u, double t) {
  auto history = net.history();
  history.push_back(EvolutionStep{u.coupling(), t, u.method(), std::nullopt});
  return NetworkState(u.apply(net.psi(), t), net.pairs(), std::move(history));
}

NetworkState evolve(const NetworkState& net, const DMCoupling& c, double t, Method method) {
  return evolve(net, CouplingPropagator(c, net.node_count(), method), t);
}

namespace {

void require_growth_span(const NetworkState& net, const DMCoupling& c) {
  const int last_old = net.node_count();
  const bool spans = (c.first() == last_old && c.second() == last_old + 1) ||
                     (c.second() == last_old && c.first() == last_old + 1);
  if (!spans) {
    throw DimensionError("growth coupling must join node " + std::to_string(last_old) +
                         " to node " + std::to_string(last_old + 1));
  }
}

}  // namespace

NetworkState grow(const NetworkState& net, BellKind new_pair, const CouplingPropagator& u, double t) {
  const DMCoupling& c = u.coupling();
  require_growth_span(net, c);
  if (u.qubit_count() != net.node_count() + 2) {
    throw DimensionError("growth propagator must act on the enlarged register");
  }
  StateVector extended = qstate::tensor(net.psi(), qstate::bell_state(new_pair));
  auto pairs = net.pairs();
  pairs.push_back(new_pair);
  auto history = net.history();
  history.push_back(EvolutionStep{c, t, u.method(), new_pair});
  return NetworkState(u.apply(extended, t), std::move(pairs), std::move(history));
}

NetworkState grow(const NetworkState& net, BellKind new_pair, const DMCoupling& c, double t,
                  Method method) {
  require_growth_span(net, c);
  return grow(net, new_pair, CouplingPropagator(c, net.node_count() + 2, method), t);
}

DensityOperator reduced(const NetworkState& net, std::span<const int> keep) {
  const auto amps = net.psi().amplitudes();
  const CMatrix full = CMatrix::outer(amps, amps);
  return DensityOperator(linalg::partial_trace(full, net.node_count(), keep));
}

DensityOperator reduced(const NetworkState& net, std::initializer_list<int> keep) {
  return reduced(net, std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace entnet::dmnet
