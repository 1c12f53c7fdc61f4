#pragma once

// Numerical tolerances shared by every module. Acceptance runs tune nothing
// else.
namespace entnet::tol {

/// Admissible deviation of a matrix from Hermiticity (max-abs).
inline constexpr double kHermitian = 1e-10;
/// Unit-norm check for state vectors.
inline constexpr double kNorm = 1e-12;
/// Unit-trace check for density operators.
inline constexpr double kTrace = 1e-10;
/// Eigenvalues in [-kNegativeEigen, 0) are roundoff and clamped to zero;
/// anything more negative is an invalid state.
inline constexpr double kNegativeEigen = 1e-10;

/// Jacobi sweep stops once the off-diagonal Frobenius norm falls below
/// kJacobiOffDiagonal * ||A||_F.
inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// sqrt(lambda_i) below this are treated as exact zeros in the concurrence.
inline constexpr double kSqrtEigenFloor = 1e-12;

/// Global purity required before the pure-state network measure applies.
inline constexpr double kGlobalPurity = 1e-8;

/// Teleportation branches with smaller probability carry no output state.
inline constexpr double kBranchProbability = 1e-14;

}  // namespace entnet::tol
