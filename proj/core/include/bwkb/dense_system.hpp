#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace bwkb {

/// One dense complex linear system, with optional appended constraint rows
/// (gauge or compatibility conditions). With constraints present the solve is
/// least squares over the stacked system; otherwise a pivoted LU.
struct DenseSystem {
  Eigen::MatrixXcd matrix;
  Eigen::VectorXcd rhs;
  std::vector<std::pair<Eigen::RowVectorXcd, std::complex<double>>> constraints;
};

struct SolveInfo {
  double residual = 0.0;       // ||Ax-b|| / (||A|| ||x|| + ||b||)
  double condition = 0.0;      // 1-norm condition estimate
  double min_pivot = 0.0;      // smallest |U_ii| of the factorization
};

/// Solves the system; throws SolverError (with the pivot index) when a pivot
/// falls below 1e-13 * scale. `info`, when given, receives the relative
/// residual and a condition estimate.
Eigen::VectorXcd solve_dense(const DenseSystem& system, SolveInfo* info = nullptr);

}  // namespace bwkb
