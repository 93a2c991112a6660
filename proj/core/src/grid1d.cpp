#include "bwkb/grid1d.hpp"

#include <cmath>
#include <numbers>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {

// First differentiation matrix on CGL nodes cos(j*pi/n), returned for nodes
// listed in ASCENDING order, on the reference interval [-1, 1].
Eigen::MatrixXd cgl_diff_ascending(int npts) {
  const int n = npts - 1;
  const double pi = std::numbers::pi;
  Eigen::VectorXd t(npts);
  for (int i = 0; i < npts; ++i) {
    // ascending: t_i = -cos(i*pi/n)
    t(i) = -std::cos(pi * i / n);
  }
  Eigen::VectorXd c(npts);
  for (int i = 0; i < npts; ++i) {
    c(i) = ((i == 0 || i == n) ? 2.0 : 1.0) * ((i % 2) ? -1.0 : 1.0);
  }
  Eigen::MatrixXd d(npts, npts);
  for (int i = 0; i < npts; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < npts; ++j) {
      if (i == j) continue;
      d(i, j) = (c(i) / c(j)) / (t(i) - t(j));
      rowsum += d(i, j);
    }
    d(i, i) = -rowsum;  // negative sum trick
  }
  return d;
}

// Clenshaw-Curtis weights for npts CGL nodes on [-1, 1], ascending order.
// Integrates each cardinal function exactly through its Chebyshev expansion.
Eigen::VectorXd cc_weights_ascending(int npts) {
  const int n = npts - 1;
  const double pi = std::numbers::pi;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(npts);
  for (int j = 0; j <= n; ++j) {
    const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
    double sum = 0.0;
    for (int k = 0; k <= n; k += 2) {
      const double ck = (k == 0 || k == n) ? 2.0 : 1.0;
      const double a_k = (2.0 / (n * ck * cj)) * std::cos(k * j * pi / n);
      sum += a_k * 2.0 / (1.0 - static_cast<double>(k) * k);  // moment of T_k
    }
    w(n - j) = sum;  // node cos(j*pi/n) sits at ascending index n-j
  }
  return w;
}

}  // namespace

Grid1D build_grid(std::array<double, 2> interval, int n) {
  if (n < 8) {
    throw ConfigError("build_grid: need at least 8 nodes");
  }
  const double lo = interval[0], hi = interval[1];
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ConfigError("build_grid: degenerate interval");
  }

  Grid1D g;
  g.lo_ = lo;
  g.hi_ = hi;
  const int m = n - 1;
  const double pi = std::numbers::pi;
  const double half = 0.5 * (hi - lo);

  g.nodes_.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes_(i) = lo + half * (1.0 - std::cos(pi * i / m));
  }
  g.d1_ = cgl_diff_ascending(n) / half;
  g.d2_ = g.d1_ * g.d1_;
  g.d1c_ = g.d1_.cast<std::complex<double>>();
  g.d2c_ = g.d2_.cast<std::complex<double>>();
  g.weights_ = cc_weights_ascending(n) * half;

  g.bary_.resize(n);
  for (int i = 0; i < n; ++i) {
    double w = (i % 2) ? -1.0 : 1.0;
    if (i == 0 || i == m) w *= 0.5;
    g.bary_(i) = w;
  }
  return g;
}

namespace {

template <typename Scalar>
Scalar bary_eval(const Eigen::VectorXd& nodes, const Eigen::VectorXd& bw,
                 const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& values,
                 double y) {
  const int n = static_cast<int>(nodes.size());
  Scalar num{};
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dy = y - nodes(i);
    if (dy == 0.0) return values(i);
    const double r = bw(i) / dy;
    num += r * values(i);
    den += r;
  }
  return num / den;
}

}  // namespace

double Grid1D::interpolate(const Eigen::VectorXd& values, double y) const {
  return bary_eval<double>(nodes_, bary_, values, y);
}

std::complex<double> Grid1D::interpolate(const Eigen::VectorXcd& values,
                                         double y) const {
  return bary_eval<std::complex<double>>(nodes_, bary_, values, y);
}

Eigen::VectorXcd Grid1D::cheb_coefficients(const Eigen::VectorXcd& values) const {
  const int npts = size();
  const int n = npts - 1;
  const double pi = std::numbers::pi;
  Eigen::VectorXcd coeff(npts);
  for (int k = 0; k <= n; ++k) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j <= n; ++j) {
      // values are stored ascending; node j of the classical formula is
      // cos(j*pi/n), i.e. ascending index n-j.
      const double scale = (j == 0 || j == n) ? 0.5 : 1.0;
      sum += scale * values(n - j) * std::cos(k * j * pi / n);
    }
    const double ck = (k == 0 || k == n) ? 2.0 : 1.0;
    coeff(k) = sum * 2.0 / (ck * n);
  }
  return coeff;
}

double Grid1D::coefficient_tail(const Eigen::VectorXcd& values, int tail) const {
  const Eigen::VectorXcd coeff = cheb_coefficients(values);
  const double total = coeff.cwiseAbs().maxCoeff();
  if (total == 0.0) return 0.0;
  double tail_max = 0.0;
  for (int i = std::max(0, size() - tail); i < size(); ++i) {
    tail_max = std::max(tail_max, std::abs(coeff(i)));
  }
  return tail_max / total;
}

}  // namespace bwkb
