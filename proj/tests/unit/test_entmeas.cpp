#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "entnet/dmnet.hpp"
#include "entnet/entmeas.hpp"
#include "entnet/error.hpp"
#include "oracles.hpp"

namespace entnet::entmeas {
namespace {

using linalg::Complex;
using qstate::Axis;
using qstate::BellKind;

const BellKind kTwoPairs[] = {BellKind::phi_plus, BellKind::phi_plus};

DensityOperator pure(const qstate::StateVector& psi) { return qstate::density_from(psi); }

/// Random mixed 2-qubit state: trace out two qubits of a random 4-qubit pure state.
CMatrix random_mixed_pair(std::mt19937_64& rng) {
  const auto psi = testing::random_state(4, rng);
  const int keep[] = {1, 2};
  return linalg::partial_trace(CMatrix::outer(psi.amplitudes(), psi.amplitudes()), 4, keep);
}

TEST(Concurrence, BellStatesAreMaximal) {
  for (auto kind : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus, BellKind::psi_minus}) {
    EXPECT_NEAR(concurrence(pure(qstate::bell_state(kind))), 1.0, 1e-12);
  }
}

TEST(Concurrence, ProductAndMixedAreZero) {
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(concurrence(pure(qstate::StateVector::basis(2, k))), 0.0, 1e-12);
  }
  EXPECT_NEAR(concurrence(DensityOperator(CMatrix::identity(4) * Complex(0.25))), 0.0, 1e-12);
}

TEST(Concurrence, WernerClosedForm) {
  for (int k = 0; k <= 20; ++k) {
    const double p = 0.05 * k;
    const double expected = std::max(0.0, (3 * p - 1) / 2);
    EXPECT_NEAR(concurrence(DensityOperator(testing::werner(p))), expected, 1e-10) << "p=" << p;
  }
  EXPECT_NEAR(concurrence(DensityOperator(testing::werner(0.8))), 0.7, 1e-10);
}

TEST(Concurrence, PureStateDeterminant) {
  auto& rng = testing::test_rng();
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = testing::random_state(2, rng);
    const double expected = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    EXPECT_NEAR(concurrence(pure(psi)), expected, 1e-9);
  }
}

TEST(Concurrence, MatchesCharacteristicPolynomialOracle) {
  auto& rng = testing::test_rng();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CMatrix rho = random_mixed_pair(rng);
    worst = std::max(worst, std::abs(concurrence(DensityOperator(rho)) - testing::concurrence_charpoly(rho)));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Concurrence, LocalUnitaryInvariance) {
  auto& rng = testing::test_rng();
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix rho = random_mixed_pair(rng);
    const std::vector<CMatrix> ops{testing::random_unitary_2x2(rng), testing::random_unitary_2x2(rng)};
    const CMatrix u = qstate::local_product(ops);
    const CMatrix rotated = linalg::matmul(linalg::matmul(u, rho), linalg::adjoint(u));
    EXPECT_NEAR(concurrence(DensityOperator(rho)), concurrence(DensityOperator(rotated)), 1e-9);
  }
}

TEST(Concurrence, RejectsWrongSize) {
  EXPECT_THROW(concurrence(DensityOperator(CMatrix::identity(2) * Complex(0.5))), DimensionError);
}

TEST(SpinFlip, BellStatesAreInvariant) {
  const auto rho = pure(qstate::bell_state(BellKind::psi_minus));
  EXPECT_LE(linalg::max_abs_diff(spin_flip(rho), rho.matrix()), 1e-15);
}

TEST(MinConcurrence, InitialNetworkAndProductState) {
  EXPECT_NEAR(min_concurrence(dmnet::initial_network(kTwoPairs)), std::sqrt(0.5), 1e-10);
  const dmnet::NetworkState product(qstate::StateVector::basis(4, 0), {BellKind::phi_plus, BellKind::phi_plus}, {});
  EXPECT_NEAR(min_concurrence(product), 0.0, 1e-12);
}

TEST(MinConcurrence, MatchesBlochOracle) {
  auto& rng = testing::test_rng();
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = testing::random_state(4, rng);
    const dmnet::NetworkState net(psi, {BellKind::phi_plus, BellKind::phi_plus}, {});
    EXPECT_NEAR(min_concurrence(net), testing::min_concurrence_bloch(psi), 1e-12);
  }
}

TEST(Labels, PairAndAxis) {
  const auto z = dmnet::DMCoupling::along(Axis::z, 0.2, 2, 3);
  EXPECT_EQ(pair_label("C", {1, 3}, z), "C_13z");
  EXPECT_EQ(pair_label("F", {12, 3}, z), "F_12-3z");
  EXPECT_EQ(pair_label("C", {1, 2}, dmnet::DMCoupling({0.1, 0.1, 0}, 2, 3)), "C_12");
}

TEST(Series, GridAndPairValidation) {
  const auto net = dmnet::initial_network(kTwoPairs);
  const auto c = dmnet::DMCoupling::along(Axis::z, 0.2, 2, 3);
  const NodePair pairs[] = {{1, 2}};
  const NodePair bad[] = {{1, 5}};
  EXPECT_THROW(concurrence_series(net, c, std::vector<double>{}, pairs), ArgumentError);
  EXPECT_THROW(concurrence_series(net, c, std::vector<double>{0.5, 1.0}, pairs), ArgumentError);
  EXPECT_THROW(concurrence_series(net, c, std::vector<double>{0.0, 1.0, 1.0}, pairs), ArgumentError);
  EXPECT_THROW(concurrence_series(net, c, std::vector<double>{0.0}, bad), ArgumentError);
  EXPECT_THROW(concurrence_series(net, c, std::vector<double>{0.0}, std::span<const NodePair>{}), ArgumentError);
}

TEST(Series, ConcurrenceColumnsMatchDirectEvaluation) {
  const auto net0 = dmnet::initial_network(kTwoPairs);
  const auto c = dmnet::DMCoupling::along(Axis::x, 0.2, 2, 3);
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.5};
  const NodePair pairs[] = {{1, 2}, {1, 3}};
  const auto table = concurrence_series(net0, c, grid, pairs);
  ASSERT_EQ(table.columns(), (std::vector<std::string>{"t", "C_12x", "C_13x"}));
  const auto col = table.column("C_12x");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto rho = dmnet::reduced(dmnet::evolve(net0, c, grid[k]), {1, 2});
    EXPECT_NEAR(col[k], testing::concurrence_charpoly(rho.matrix()), 1e-8);
  }
}

TEST(Series, MinConcurrenceStaysAtHalfRootUnderInnerCoupling) {
  // every single-node marginal stays I/2, so C_min never moves
  const auto net0 = dmnet::initial_network(kTwoPairs);
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(0.5 * k);
  for (auto axis : {Axis::x, Axis::z}) {
    const auto table = min_concurrence_series(net0, dmnet::DMCoupling::along(axis, 0.2, 2, 3), grid);
    EXPECT_EQ(table.columns()[1], std::string("Cmin_") + std::string(qstate::to_string(axis)));
    for (double v : table.column(table.columns()[1])) EXPECT_NEAR(v, std::sqrt(0.5), 1e-10);
  }
}

}  // namespace
}  // namespace entnet::entmeas
