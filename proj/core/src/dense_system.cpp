#include "bwkb/dense_system.hpp"

#include <cmath>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {

// Hager-style 1-norm estimate of ||A^-1|| from an LU factorization.
double inverse_norm1_estimate(const Eigen::PartialPivLU<Eigen::MatrixXcd>& lu,
                              int n) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Constant(n, 1.0 / n);
  double est = 0.0;
  for (int it = 0; it < 5; ++it) {
    Eigen::VectorXcd y = lu.solve(x);
    const double norm = y.lpNorm<1>();
    if (norm <= est) break;
    est = norm;
    Eigen::VectorXcd xi(n);
    for (int i = 0; i < n; ++i) {
      const double a = std::abs(y(i));
      xi(i) = a > 0 ? y(i) / a : std::complex<double>(1.0, 0.0);
    }
    Eigen::VectorXcd z = lu.adjoint().solve(xi);
    int jmax = 0;
    z.cwiseAbs().maxCoeff(&jmax);
    x = Eigen::VectorXcd::Zero(n);
    x(jmax) = 1.0;
  }
  return est;
}

}  // namespace

Eigen::VectorXcd solve_dense(const DenseSystem& system, SolveInfo* info) {
  const auto& a = system.matrix;
  const auto& b = system.rhs;
  if (a.rows() != a.cols()) {
    throw InputError("solve_dense: matrix must be square");
  }
  if (a.rows() != b.size()) {
    throw InputError("solve_dense: rhs size mismatch");
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw InputError("solve_dense: non-finite entries");
  }

  const int n = static_cast<int>(a.rows());
  Eigen::VectorXcd x;
  double min_pivot = 0.0;
  double cond = 0.0;

  if (system.constraints.empty()) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
    const double scale = a.cwiseAbs().maxCoeff();
    min_pivot = diag.cwiseAbs().minCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(diag(i)) < 1e-13 * scale) {
        throw SolverError("solve_dense: numerically singular matrix", -1, i);
      }
    }
    x = lu.solve(b);
    cond = a.cwiseAbs().colwise().sum().maxCoeff() * inverse_norm1_estimate(lu, n);
  } else {
    const int m = static_cast<int>(system.constraints.size());
    Eigen::MatrixXcd stacked(n + m, n);
    Eigen::VectorXcd rhs(n + m);
    stacked.topRows(n) = a;
    rhs.head(n) = b;
    for (int i = 0; i < m; ++i) {
      stacked.row(n + i) = system.constraints[i].first;
      rhs(n + i) = system.constraints[i].second;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stacked);
    const double scale = stacked.cwiseAbs().maxCoeff();
    const Eigen::VectorXcd diag = qr.matrixR().diagonal();
    min_pivot = diag.cwiseAbs().minCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(diag(i)) < 1e-13 * scale) {
        throw SolverError("solve_dense: numerically singular stacked system", -1, i);
      }
    }
    x = qr.solve(rhs);
    cond = std::abs(diag(0)) / std::abs(diag(n - 1));
  }

  if (info) {
    const double num = (a * x - b).norm();
    const double den = a.norm() * x.norm() + b.norm();
    info->residual = den > 0 ? num / den : num;
    info->condition = cond;
    info->min_pivot = min_pivot;
  }
  return x;
}

}  // namespace bwkb
