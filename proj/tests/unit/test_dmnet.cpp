#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "entnet/dmnet.hpp"
#include "entnet/entmeas.hpp"
#include "entnet/error.hpp"
#include "oracles.hpp"

namespace entnet::dmnet {
namespace {

using linalg::adjoint;
using linalg::Complex;
using linalg::matmul;
using linalg::max_abs_diff;

constexpr Axis kAxes[] = {Axis::x, Axis::y, Axis::z};
const BellKind kTwoPairs[] = {BellKind::phi_plus, BellKind::phi_plus};

double state_distance(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(Coupling, Validation) {
  EXPECT_THROW(DMCoupling({0, 0, 1}, 0, 2), DimensionError);
  EXPECT_THROW(DMCoupling({0, 0, 1}, 2, 2), DimensionError);
  EXPECT_THROW(DMCoupling({NAN, 0, 1}, 1, 2), ArgumentError);
  EXPECT_THROW(dm_hamiltonian(DMCoupling::along(Axis::z, 0.2, 2, 5), 4), DimensionError);
}

TEST(Coupling, SingleAxisDetection) {
  EXPECT_EQ(DMCoupling({0, 0.3, 0}, 1, 2).single_axis(), Axis::y);
  EXPECT_EQ(DMCoupling({0.1, 0.3, 0}, 1, 2).single_axis(), std::nullopt);
  const auto zero_x = DMCoupling::along(Axis::x, 0.0, 1, 2);
  EXPECT_EQ(zero_x.single_axis(), Axis::x);
  EXPECT_DOUBLE_EQ(DMCoupling::along(Axis::x, -0.4, 1, 2).axis_strength(), -0.4);
}

TEST(Hamiltonian, SpectrumAndKernel) {
  for (auto axis : kAxes) {
    for (double d : {0.1, 0.2, 0.5}) {
      const CMatrix h = dm_hamiltonian(DMCoupling::along(axis, d, 1, 2), 2);
      EXPECT_LE(linalg::hermiticity_defect(h), 1e-15);
      const auto eig = linalg::eig_hermitian(h);
      EXPECT_NEAR(eig.values[0], 2 * d, 1e-12);
      EXPECT_NEAR(eig.values[1], 0.0, 1e-12);
      EXPECT_NEAR(eig.values[2], 0.0, 1e-12);
      EXPECT_NEAR(eig.values[3], -2 * d, 1e-12);
    }
  }
  // z-axis coupling leaves |00> and |11> untouched
  const CMatrix hz = dm_hamiltonian(DMCoupling::along(Axis::z, 0.2, 1, 2), 2);
  for (std::size_t k : {0u, 3u}) {
    const auto hv = linalg::apply(hz, StateVector::basis(2, k).amplitudes());
    for (const auto& v : hv) EXPECT_EQ(v, Complex(0.0));
  }
}

TEST(Hamiltonian, ZAxisExplicitEntries) {
  // D (X Y - Y X) = 2 i D (|01><10| - |10><01|)
  const double d = 0.3;
  const CMatrix h = dm_hamiltonian(DMCoupling::along(Axis::z, d, 1, 2), 2);
  EXPECT_NEAR(std::abs(h(1, 2) - Complex(0.0, 2 * d)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(2, 1) - Complex(0.0, -2 * d)), 0.0, 1e-15);
}

TEST(Hamiltonian, LinearInVector) {
  const DMVector v{0.1, -0.2, 0.3};
  const CMatrix h = dm_hamiltonian(DMCoupling(v, 2, 3), 4);
  CMatrix sum = dm_hamiltonian(DMCoupling::along(Axis::x, v.x, 2, 3), 4);
  sum += dm_hamiltonian(DMCoupling::along(Axis::y, v.y, 2, 3), 4);
  sum += dm_hamiltonian(DMCoupling::along(Axis::z, v.z, 2, 3), 4);
  EXPECT_LE(max_abs_diff(h, sum), 1e-15);
}

TEST(Unitary, AnalyticMatchesOracleOnGrid) {
  for (auto axis : kAxes) {
    for (double d : {0.1, 0.2, 0.5}) {
      const auto c = DMCoupling::along(axis, d, 2, 3);
      const CouplingPropagator analytic(c, 4, Method::analytic);
      const CouplingPropagator oracle(c, 4, Method::oracle);
      double worst = 0.0;
      for (int k = 0; k <= 200; ++k) {
        const double t = 0.1 * k;
        worst = std::max(worst, max_abs_diff(analytic.unitary(t), oracle.unitary(t)));
      }
      EXPECT_LE(worst, 1e-10) << "axis=" << qstate::to_string(axis) << " D=" << d;
    }
  }
}

TEST(Unitary, AnalyticRejectsGeneralVector) {
  EXPECT_THROW(CouplingPropagator(DMCoupling({0.1, 0.1, 0}, 1, 2), 2, Method::analytic), ArgumentError);
  EXPECT_NO_THROW(CouplingPropagator(DMCoupling({0.1, 0.1, 0}, 1, 2), 2, Method::oracle));
}

TEST(Unitary, UnitarityAndReversibility) {
  const auto c = DMCoupling::along(Axis::x, 0.2, 2, 3);
  for (auto method : {Method::analytic, Method::oracle}) {
    const CouplingPropagator u(c, 4, method);
    for (double t : {0.0, 1.3, 7.7, 20.0}) {
      EXPECT_LE(max_abs_diff(matmul(u.unitary(t), adjoint(u.unitary(t))), CMatrix::identity(16)), 1e-12);
      EXPECT_LE(max_abs_diff(matmul(u.unitary(-t), u.unitary(t)), CMatrix::identity(16)), 1e-12);
    }
  }
}

TEST(Unitary, QuarterPeriodIsDiagonalSign) {
  // at D t = pi/2 the rotation inside span{|01>,|10>} is -1; |00>, |11> stay fixed
  const double d = 0.2;
  const auto u = CouplingPropagator(DMCoupling::along(Axis::z, d, 1, 2), 2, Method::oracle)
                     .unitary(std::numbers::pi / (2 * d));
  const double diag[] = {1.0, -1.0, -1.0, 1.0};
  EXPECT_LE(max_abs_diff(u, CMatrix::diagonal(std::span<const double>(diag))), 1e-12);
}

TEST(Unitary, FullPeriodReturnsIdentity) {
  for (auto axis : kAxes) {
    const double d = 0.2;
    const CouplingPropagator u(DMCoupling::along(axis, d, 2, 3), 4, Method::oracle);
    EXPECT_LE(max_abs_diff(u.unitary(std::numbers::pi / d), CMatrix::identity(16)), 1e-10);
  }
}

TEST(Network, InitialState) {
  const auto net = initial_network(kTwoPairs);
  EXPECT_EQ(net.node_count(), 4);
  EXPECT_TRUE(net.history().empty());
  EXPECT_THROW(initial_network(std::span<const BellKind>{}), ArgumentError);
  const auto rho12 = reduced(net, {1, 2});
  EXPECT_NEAR(qstate::purity(rho12), 1.0, 1e-14);
}

TEST(Network, EvolvePreservesNormAndRecordsHistory) {
  const auto net0 = initial_network(kTwoPairs);
  const auto c = DMCoupling::along(Axis::z, 0.2, 2, 3);
  const auto net = evolve(net0, c, 3.0);
  double norm2 = 0.0;
  for (const auto& a : net.psi().amplitudes()) norm2 += std::norm(a);
  EXPECT_NEAR(norm2, 1.0, 1e-12);
  ASSERT_EQ(net.history().size(), 1u);
  EXPECT_EQ(net.history()[0].coupling, c);
  EXPECT_DOUBLE_EQ(net.history()[0].t, 3.0);
  EXPECT_LE(state_distance(net.psi(), evolve(net0, c, 3.0, Method::analytic).psi()), 1e-12);
}

TEST(Network, PeriodicInSpectrumPeriod) {
  const auto net0 = initial_network(kTwoPairs);
  for (auto axis : kAxes) {
    const double d = 0.2;
    const CouplingPropagator u(DMCoupling::along(axis, d, 2, 3), 4, Method::oracle);
    for (double t : {0.0, 1.0, 4.5, 11.0}) {
      const auto a = evolve(net0, u, t);
      const auto b = evolve(net0, u, t + std::numbers::pi / d);
      EXPECT_LE(state_distance(a.psi(), b.psi()), 1e-9);
    }
  }
}

TEST(Network, InnerPairIsMaximallyMixedAtAllTimes) {
  // qubits 1 and 4 purify 2 and 3 maximally, so no unitary on (2,3) can
  // change rho_23 or rho_14 away from I/4
  const auto net0 = initial_network(kTwoPairs);
  const CMatrix quarter = CMatrix::identity(4) * Complex(0.25);
  for (auto axis : kAxes) {
    const CouplingPropagator u(DMCoupling::along(axis, 0.2, 2, 3), 4, Method::oracle);
    for (double t = 0.0; t <= 20.0; t += 0.7) {
      const auto net = evolve(net0, u, t);
      EXPECT_LE(max_abs_diff(reduced(net, {2, 3}).matrix(), quarter), 1e-12);
      EXPECT_LE(max_abs_diff(reduced(net, {1, 4}).matrix(), quarter), 1e-12);
    }
  }
}

TEST(Network, ReducedMatchesNaiveTrace) {
  const auto net = evolve(initial_network(kTwoPairs), DMCoupling::along(Axis::x, 0.2, 2, 3), 2.2);
  const auto amps = net.psi().amplitudes();
  const CMatrix full = CMatrix::outer(amps, amps);
  for (const std::vector<int>& keep : {std::vector<int>{1, 3}, {1, 2}, {2, 4}, {3, 4}}) {
    EXPECT_LE(max_abs_diff(reduced(net, keep).matrix(), testing::partial_trace_naive(full, 4, keep)),
              1e-14);
  }
}

TEST(Growth, ZeroTimeAddsUncorrelatedPair) {
  const auto net4 = evolve(initial_network(kTwoPairs), DMCoupling::along(Axis::z, 0.2, 2, 3), 2.0);
  const auto net6 = grow(net4, BellKind::phi_plus, DMCoupling::along(Axis::z, 0.2, 4, 5), 0.0);
  EXPECT_EQ(net6.node_count(), 6);
  EXPECT_EQ(net6.pairs().size(), 3u);
  ASSERT_EQ(net6.history().size(), 2u);
  EXPECT_EQ(net6.history()[1].appended, BellKind::phi_plus);
  EXPECT_NEAR(entmeas::concurrence(reduced(net6, {1, 5})), 0.0, 1e-12);
  EXPECT_NEAR(entmeas::concurrence(reduced(net6, {1, 6})), 0.0, 1e-12);
  EXPECT_NEAR(entmeas::concurrence(reduced(net6, {5, 6})), 1.0, 1e-12);
  EXPECT_LE(max_abs_diff(reduced(net6, {1, 2}).matrix(), reduced(net4, {1, 2}).matrix()), 1e-14);
}

TEST(Growth, CouplingMustSpanOldAndNewNodes) {
  const auto net4 = initial_network(kTwoPairs);
  EXPECT_THROW(grow(net4, BellKind::phi_plus, DMCoupling::along(Axis::z, 0.2, 3, 5), 1.0), DimensionError);
  EXPECT_THROW(grow(net4, BellKind::phi_plus, DMCoupling::along(Axis::z, 0.2, 5, 6), 1.0), DimensionError);
  EXPECT_NO_THROW(grow(net4, BellKind::phi_plus, DMCoupling::along(Axis::z, 0.2, 5, 4), 1.0));
  const CouplingPropagator wrong(DMCoupling::along(Axis::z, 0.2, 4, 5), 8, Method::oracle);
  EXPECT_THROW(grow(net4, BellKind::phi_plus, wrong, 1.0), DimensionError);
}

TEST(Network, EvolveRejectsMismatchedRegister) {
  const auto net = initial_network(kTwoPairs);
  const CouplingPropagator u(DMCoupling::along(Axis::z, 0.2, 1, 2), 2, Method::oracle);
  EXPECT_THROW(evolve(net, u, 1.0), DimensionError);
}

TEST(Comparison, OuterPairClosedFormLogged) {
  // The published reduced operator for nodes 1-2 under z coupling is not
  // trusted; report how far it sits from the computed one.
  const double d = 0.2;
  const auto net0 = initial_network(kTwoPairs);
  const CouplingPropagator u(DMCoupling::along(Axis::z, d, 2, 3), 4, Method::oracle);
  double worst = 0.0;
  for (double t = 0.0; t <= 20.0; t += 0.5) {
    const double c = std::cos(d * t), s = std::sin(d * t), s2 = std::sin(2 * d * t);
    const double cxx = std::pow(c, 4) - std::pow(s, 4);
    const double czz = std::pow(c, 4) + std::pow(s, 4) - s2 * s2;
    const CMatrix x = qstate::pauli(Axis::x), y = qstate::pauli(Axis::y), z = qstate::pauli(Axis::z);
    CMatrix closed = CMatrix::identity(4);
    closed += cxx * linalg::kron(x, x);
    closed += -cxx * linalg::kron(y, y);
    closed += czz * linalg::kron(z, z);
    closed *= 0.25;
    worst = std::max(worst, max_abs_diff(closed, reduced(evolve(net0, u, t), {1, 2}).matrix()));
  }
  RecordProperty("closed_form_max_deviation", std::to_string(worst));
  std::printf("rho_12 closed form vs computed: max |diff| = %.3e\n", worst);
  SUCCEED();
}

}  // namespace
}  // namespace entnet::dmnet
