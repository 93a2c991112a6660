#include <random>

#include "bwkb/dense_system.hpp"
#include "bwkb/fourier.hpp"
#include "bwkb/errors.hpp"
#include "doctest.h"

using namespace bwkb;

TEST_CASE("identity system returns the right-hand side") {
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXcd::Identity(5, 5);
  sys.rhs = Eigen::VectorXcd::Random(5);
  const Eigen::VectorXcd x = solve_dense(sys);
  CHECK((x - sys.rhs).norm() < 1e-14);
}

TEST_CASE("diagonal 2x2 example") {
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXcd::Zero(2, 2);
  sys.matrix(0, 0) = 2.0;
  sys.matrix(1, 1) = 4.0;
  sys.rhs = Eigen::VectorXcd(2);
  sys.rhs << 2.0, 8.0;
  const Eigen::VectorXcd x = solve_dense(sys);
  CHECK(std::abs(x(0) - 1.0) < 1e-15);
  CHECK(std::abs(x(1) - 2.0) < 1e-15);
}

TEST_CASE("random well-conditioned system passes the residual oracle") {
  std::mt19937 rng(42);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd a(50, 50);
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      a(i, j) = Complex(gauss(rng), gauss(rng));
    }
    a(i, i) += 20.0;  // keep it comfortably nonsingular
  }
  Eigen::VectorXcd b(50);
  for (int i = 0; i < 50; ++i) b(i) = Complex(gauss(rng), gauss(rng));

  SolveInfo info;
  const Eigen::VectorXcd x = solve_dense({a, b, {}}, &info);
  CHECK((a * x - b).norm() <= 1e-10 * (a.norm() * x.norm() + b.norm()));
  CHECK(info.residual <= 1e-10);
  CHECK(info.condition > 0.0);
}

TEST_CASE("singular matrix raises a solver error carrying the pivot") {
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXcd::Zero(3, 3);
  sys.matrix(0, 0) = 1.0;
  sys.matrix(1, 1) = 1.0;  // third row/column identically zero
  sys.rhs = Eigen::VectorXcd::Ones(3);
  CHECK_THROWS_AS(solve_dense(sys), SolverError);
  try {
    solve_dense(sys);
  } catch (const SolverError& e) {
    CHECK(e.pivot >= 0);
  }
}

TEST_CASE("gauge constraint row fixes a one-dimensional null space") {
  // singular system: x0 + x1 determined, difference free
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXcd::Zero(2, 2);
  sys.matrix(0, 0) = 1.0;
  sys.matrix(0, 1) = 1.0;
  sys.matrix(1, 0) = 1.0;
  sys.matrix(1, 1) = 1.0;
  sys.rhs = Eigen::VectorXcd::Constant(2, 2.0);
  Eigen::RowVectorXcd gauge(2);
  gauge << 1.0, -1.0;
  sys.constraints.push_back({gauge, Complex(0.0, 0.0)});
  const Eigen::VectorXcd x = solve_dense(sys);
  CHECK(std::abs(x(0) - 1.0) < 1e-12);
  CHECK(std::abs(x(1) - 1.0) < 1e-12);
}

TEST_CASE("non-finite entries are rejected") {
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXcd::Identity(2, 2);
  sys.matrix(0, 0) = std::numeric_limits<double>::quiet_NaN();
  sys.rhs = Eigen::VectorXcd::Ones(2);
  CHECK_THROWS_AS(solve_dense(sys), InputError);
}
