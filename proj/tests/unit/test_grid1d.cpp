#include <cmath>

#include "bwkb/errors.hpp"
#include "bwkb/grid1d.hpp"
#include "doctest.h"

using namespace bwkb;

TEST_CASE("differentiation is exact on low-degree polynomials") {
  const Grid1D g = build_grid({0.0, 1.0}, 16);
  Eigen::VectorXd y2(g.size());
  for (int i = 0; i < g.size(); ++i) y2(i) = g.nodes()(i) * g.nodes()(i);
  const Eigen::VectorXd d = g.diff() * y2;
  for (int i = 0; i < g.size(); ++i) {
    CHECK(d(i) == doctest::Approx(2.0 * g.nodes()(i)).epsilon(1e-12));
  }
}

TEST_CASE("monomials up to degree five differentiate to 1e-10") {
  const Grid1D g = build_grid({-0.5, 1.5}, 12);
  for (int m = 1; m <= 5; ++m) {
    Eigen::VectorXd f(g.size());
    for (int i = 0; i < g.size(); ++i) f(i) = std::pow(g.nodes()(i), m);
    const Eigen::VectorXd d = g.diff() * f;
    for (int i = 0; i < g.size(); ++i) {
      const double exact = m * std::pow(g.nodes()(i), m - 1);
      CHECK(std::abs(d(i) - exact) < 1e-10);
    }
  }
}

TEST_CASE("quadrature of one and of polynomials") {
  const Grid1D g = build_grid({-1.0, 0.0}, 16);
  CHECK(g.integrate(Eigen::VectorXd::Ones(g.size()).eval()) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // exact for degree <= n-1
  Eigen::VectorXd f(g.size());
  for (int i = 0; i < g.size(); ++i) f(i) = std::pow(g.nodes()(i), 9);
  CHECK(g.integrate(f) == doctest::Approx(-0.1).epsilon(1e-12));
}

TEST_CASE("derivative of the exponential matches the closed form") {
  const Grid1D g = build_grid({0.0, 1.0}, 24);
  Eigen::VectorXd f(g.size());
  for (int i = 0; i < g.size(); ++i) f(i) = std::exp(g.nodes()(i));
  const Eigen::VectorXd d = g.diff() * f;
  double err = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    err = std::max(err, std::abs(d(i) - f(i)));
  }
  CHECK(err < 1e-10);
}

TEST_CASE("spectral decay: doubling the grid buys more than 1e3 accuracy") {
  // exp(y) on [0,1] is already at roundoff for N=12, which makes the ratio
  // meaningless there; exp(5y) keeps the N=12 truncation error visible.
  auto max_err = [](int n) {
    const Grid1D g = build_grid({0.0, 1.0}, n);
    Eigen::VectorXd f(g.size());
    for (int i = 0; i < g.size(); ++i) f(i) = std::exp(5.0 * g.nodes()(i));
    const Eigen::VectorXd d = g.diff() * f;
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      err = std::max(err, std::abs(d(i) - 5.0 * f(i)));
    }
    return err;
  };
  CHECK(max_err(12) / max_err(24) > 1e3);

  // exp(y) itself is resolved to near machine precision at both sizes
  auto exp_err = [](int n) {
    const Grid1D g = build_grid({0.0, 1.0}, n);
    Eigen::VectorXd f(g.size());
    for (int i = 0; i < g.size(); ++i) f(i) = std::exp(g.nodes()(i));
    const Eigen::VectorXd d = g.diff() * f;
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) err = std::max(err, std::abs(d(i) - f(i)));
    return err;
  };
  CHECK(exp_err(12) < 1e-10);
  CHECK(exp_err(24) < 1e-10);
}

TEST_CASE("quadrature weights are positive") {
  for (int n : {8, 16, 33, 64}) {
    const Grid1D g = build_grid({0.0, 2.0}, n);
    CHECK(g.weights().minCoeff() > 0.0);
  }
}

TEST_CASE("interpolation reproduces values between nodes") {
  const Grid1D g = build_grid({0.0, 1.0}, 20);
  Eigen::VectorXd f(g.size());
  for (int i = 0; i < g.size(); ++i) f(i) = std::sin(3.0 * g.nodes()(i));
  CHECK(g.interpolate(f, 0.37) == doctest::Approx(std::sin(1.11)).epsilon(1e-12));
  CHECK(g.interpolate(f, g.nodes()(3)) == f(3));  // exact at nodes
}

TEST_CASE("coefficient tail flags unresolved samples") {
  const Grid1D g = build_grid({0.0, 1.0}, 12);
  Eigen::VectorXcd smooth(g.size()), rough(g.size());
  for (int i = 0; i < g.size(); ++i) {
    smooth(i) = std::cos(2.0 * g.nodes()(i));
    rough(i) = std::exp(-g.nodes()(i) / 0.005);
  }
  CHECK(g.coefficient_tail(smooth) < 1e-6);
  CHECK(g.coefficient_tail(rough) > 1e-3);
}

TEST_CASE("bad grid requests are configuration errors") {
  CHECK_THROWS_AS(build_grid({0.0, 1.0}, 7), ConfigError);
  CHECK_THROWS_AS(build_grid({1.0, 1.0}, 16), ConfigError);
}
