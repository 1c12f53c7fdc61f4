#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entnet/dmnet.hpp"
#include "entnet/qstate.hpp"
#include "entnet/sweep.hpp"

namespace entnet::entmeas {

using linalg::CMatrix;
using qstate::DensityOperator;

/// Unordered node pair, 1-based.
using NodePair = std::pair<int, int>;

struct ConcurrenceValue {
  double value;
  NodePair pair;
  double t;
};

/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y)
CMatrix spin_flip(const DensityOperator& rho);

/// Wootters concurrence via R = sqrt(sqrt(rho) rho~ sqrt(rho)); the
/// descending eigenvalues of R stand in for sqrt(lambda_i).
double concurrence(const DensityOperator& rho);

/// sqrt(1 - (1/N) sum_i Tr rho_i^2) over all single-node marginals. Requires
/// a pure global state (always true for NetworkState, checked anyway).
double min_concurrence(const dmnet::NetworkState& net);

/// Column label such as "C_13z"; the axis suffix is dropped for general
/// couplings.
std::string pair_label(std::string_view prefix, NodePair pair, const dmnet::DMCoupling& c);
std::string axis_suffix(const dmnet::DMCoupling& c);

/// Throws ArgumentError unless the grid is nonempty, starts at 0 and is
/// strictly increasing.
void validate_grid(std::span<const double> t_grid);

/// Concurrence of each requested pair of reduced(evolve(net0, c, t)) for
/// every t. Columns C_<ij><axis>.
SweepResult concurrence_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                               std::span<const double> t_grid, std::span<const NodePair> pairs,
                               dmnet::Method method = dmnet::Method::oracle);

/// Single column Cmin_<axis>.
SweepResult min_concurrence_series(const dmnet::NetworkState& net0, const dmnet::DMCoupling& c,
                                   std::span<const double> t_grid,
                                   dmnet::Method method = dmnet::Method::oracle);

}  // namespace entnet::entmeas
