#pragma once

#include <Eigen/Dense>

namespace bwkb {

/// Chebyshev-Gauss-Lobatto collocation grid on an interval, nodes ascending.
///
/// Carries dense first/second differentiation operators and Clenshaw-Curtis
/// quadrature weights. Differentiation is exact on polynomials of degree
/// < n; quadrature is exact on polynomials of degree <= n-1.
class Grid1D {
public:
  Grid1D() = default;

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::MatrixXd& diff() const { return d1_; }
  const Eigen::MatrixXd& diff2() const { return d2_; }
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Complex views of the differentiation operators, for mode profiles.
  const Eigen::MatrixXcd& diffc() const { return d1c_; }
  const Eigen::MatrixXcd& diff2c() const { return d2c_; }

  /// Quadrature of nodal samples.
  double integrate(const Eigen::VectorXd& values) const {
    return weights_.dot(values);
  }
  std::complex<double> integrate(const Eigen::VectorXcd& values) const {
    return (weights_.cast<std::complex<double>>().array() * values.array()).sum();
  }

  /// Stable barycentric evaluation of the interpolant at y.
  double interpolate(const Eigen::VectorXd& values, double y) const;
  std::complex<double> interpolate(const Eigen::VectorXcd& values, double y) const;

  /// Chebyshev expansion coefficients of nodal samples (index 0 = constant).
  Eigen::VectorXcd cheb_coefficients(const Eigen::VectorXcd& values) const;

  /// Relative magnitude of the trailing `tail` coefficients; a large value
  /// means the grid does not resolve the sampled function.
  double coefficient_tail(const Eigen::VectorXcd& values, int tail = 3) const;

  friend Grid1D build_grid(std::array<double, 2> interval, int n);

private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  Eigen::VectorXd nodes_;
  Eigen::MatrixXd d1_;
  Eigen::MatrixXd d2_;
  Eigen::MatrixXcd d1c_;
  Eigen::MatrixXcd d2c_;
  Eigen::VectorXd weights_;
  Eigen::VectorXd bary_;  // barycentric weights
};

/// Builds the collocation grid; n >= 8 nodes on a nondegenerate interval.
Grid1D build_grid(std::array<double, 2> interval, int n);

}  // namespace bwkb
