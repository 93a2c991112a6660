#include <cmath>
#include <functional>
#include <random>

#include "bwkb/bl_profile.hpp"
#include "bwkb/cutoff.hpp"
#include "doctest.h"

using namespace bwkb;

namespace {

const SmoothCutoff kChi(0.25, 0.375);

// single-mode profile with prescribed real z-coefficients
BLProfile profile_from(const std::vector<double>& coeff, double kappa) {
  BLProfile p = zero_profile(std::sqrt(kappa), Interface::Top,
                             ProfileKind::TangentialVelocity);
  for (double c : coeff) {
    Eigen::VectorXcd modes(1);
    modes(0) = c;
    p.coeff.push_back(CoefficientField::from_trace(modes));
  }
  return p;
}

double coeff_at(const BLProfile& p, int l) {
  if (l > p.degree()) return 0.0;
  const Eigen::VectorXcd modes = p.coeff[l].trace(0);
  return modes(0).real();
}

double eval_at(const BLProfile& p, double z) {
  return p.eval_mode(kChi, 0, 0.0, z).real();
}

// adaptive Simpson quadrature, the independent oracle for tail integrals
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int depth = 0) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double left = (m - a) / 6.0 * (fa + 4.0 * f(lm) + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * f(rm) + fb);
  if (depth > 28 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, 0.5 * tol, depth + 1) +
         adaptive_simpson(f, m, b, 0.5 * tol, depth + 1);
}

double tail_quadrature(const BLProfile& p, double z, double kappa) {
  const double cut = z + 60.0 / std::sqrt(kappa);
  auto f = [&](double s) { return eval_at(p, s); };
  // relative tolerance: the crude whole-interval estimate sets the scale
  double scale = std::abs((cut - z) / 6.0 *
                          (f(z) + 4.0 * f(0.5 * (z + cut)) + f(cut)));
  return adaptive_simpson(f, z, cut, 1e-13 * std::max(1.0, scale));
}

}  // namespace

TEST_CASE("dz of the pure exponential") {
  const double kappa = 2.0;
  const BLProfile p = profile_from({1.0}, kappa);
  const BLProfile d = bl::dz(p);
  CHECK(coeff_at(d, 0) == doctest::Approx(-std::sqrt(kappa)).epsilon(1e-15));
  CHECK(d.degree() == 0);
}

TEST_CASE("dz of z exp(-sqrt(kappa) z)") {
  const double kappa = 3.0;
  const BLProfile p = profile_from({0.0, 1.0}, kappa);
  const BLProfile d = bl::dz(p);
  CHECK(coeff_at(d, 0) == doctest::Approx(1.0));
  CHECK(coeff_at(d, 1) == doctest::Approx(-std::sqrt(kappa)));
}

TEST_CASE("dz agrees with a central finite difference") {
  const double kappa = 1.7;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const BLProfile p =
      profile_from({u(rng), u(rng), u(rng), u(rng), u(rng)}, kappa);
  const BLProfile d = bl::dz(p);
  const double z = 0.7, h = 1e-5;
  const double fd = (eval_at(p, z + h) - eval_at(p, z - h)) / (2.0 * h);
  CHECK(eval_at(d, z) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("tail integral of the pure exponential") {
  for (double kappa : {0.5, 1.0, 3.0}) {
    const BLProfile q = bl::tail_integral(profile_from({1.0}, kappa));
    CHECK(coeff_at(q, 0) ==
          doctest::Approx(1.0 / std::sqrt(kappa)).epsilon(1e-14));
  }
}

TEST_CASE("tail integral of z exp(-sqrt(kappa) z)") {
  const double kappa = 2.0;
  const BLProfile q = bl::tail_integral(profile_from({0.0, 1.0}, kappa));
  CHECK(coeff_at(q, 0) == doctest::Approx(1.0 / kappa).epsilon(1e-14));
  CHECK(coeff_at(q, 1) == doctest::Approx(1.0 / std::sqrt(kappa)).epsilon(1e-14));
}

TEST_CASE("closed-form tail integrals match adaptive quadrature, l <= 5") {
  for (double kappa : {0.5, 1.0, 3.0}) {
    for (int l = 0; l <= 5; ++l) {
      std::vector<double> coeff(l + 1, 0.0);
      coeff[l] = 1.0;
      const BLProfile p = profile_from(coeff, kappa);
      const BLProfile q = bl::tail_integral(p);
      for (double z : {0.0, 0.5, 2.0}) {
        CHECK(std::abs(eval_at(q, z) - tail_quadrature(p, z, kappa)) < 1e-10);
      }
    }
  }
}

TEST_CASE("random degree-3 profile: tail integral vs quadrature at kappa=2") {
  const double kappa = 2.0;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const BLProfile p = profile_from({u(rng), u(rng), u(rng), u(rng)}, kappa);
  const BLProfile q = bl::tail_integral(p);
  for (double z : {0.0, 0.5, 2.0}) {
    CHECK(std::abs(eval_at(q, z) - tail_quadrature(p, z, kappa)) < 1e-10);
  }
}

TEST_CASE("fundamental theorem: dz of the tail integral gives back -p") {
  const double kappa = 1.3;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const BLProfile p =
      profile_from({u(rng), u(rng), u(rng), u(rng), u(rng)}, kappa);
  const BLProfile back = bl::dz(bl::tail_integral(p));
  for (int l = 0; l <= p.degree(); ++l) {
    CHECK(std::abs(coeff_at(back, l) + coeff_at(p, l)) < 1e-12);
  }
}

TEST_CASE("layer ODE, constant right-hand side") {
  const double kappa = 2.5;
  const double gamma0 = 0.8, f0 = -0.3;
  Eigen::VectorXcd f0m(1);
  f0m(0) = f0;
  const BLProfile f = bl::solve_layer_ode(profile_from({gamma0}, kappa),
                                          CoefficientField::from_trace(f0m), kappa);
  CHECK(coeff_at(f, 0) == doctest::Approx(f0));
  CHECK(coeff_at(f, 1) ==
        doctest::Approx(gamma0 / (2.0 * std::sqrt(kappa))).epsilon(1e-14));
}

TEST_CASE("layer ODE with zero right side reproduces the pure decay") {
  const double kappa = 1.0;
  Eigen::VectorXcd w(1);
  w(0) = 2.0;
  const BLProfile rhs = zero_profile(1.0, Interface::Top,
                                     ProfileKind::TangentialVelocity);
  const BLProfile f =
      bl::solve_layer_ode(rhs, CoefficientField::from_trace(w), kappa);
  CHECK(f.degree() == 0);
  CHECK(coeff_at(f, 0) == doctest::Approx(2.0));
  CHECK(eval_at(f, 1.5) == doctest::Approx(2.0 * std::exp(-1.5)).epsilon(1e-14));
}

TEST_CASE("layer ODE residual vanishes symbolically for K <= 4") {
  const double kappa = 3.0;
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int big_k = 0; big_k <= 4; ++big_k) {
    std::vector<double> gamma(big_k + 1);
    for (double& g : gamma) g = u(rng);
    const BLProfile rhs = profile_from(gamma, kappa);
    Eigen::VectorXcd f0m(1);
    f0m(0) = u(rng);
    const BLProfile f =
        bl::solve_layer_ode(rhs, CoefficientField::from_trace(f0m), kappa);

    // independent residual route: -f'' + kappa f via dz applied twice
    const BLProfile fzz = bl::dz(bl::dz(f));
    double rhs_max = 0.0;
    for (double g : gamma) rhs_max = std::max(rhs_max, std::abs(g));
    for (int l = 0; l <= f.degree(); ++l) {
      const double res = -coeff_at(fzz, l) + kappa * coeff_at(f, l) -
                         (l <= rhs.degree() ? coeff_at(rhs, l) : 0.0);
      CHECK(std::abs(res) <= 1e-12 * std::max(rhs_max, 1.0));
    }
    // boundary condition holds exactly
    CHECK(coeff_at(f, 0) == f0m(0).real());
    // degree grows by exactly one
    CHECK(f.degree() == big_k + 1);
  }
}

TEST_CASE("helmholtz operator matches the two-derivative route") {
  const double kappa = 2.2;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const BLProfile p = profile_from({u(rng), u(rng), u(rng), u(rng)}, kappa);
  const BLProfile a = bl::helmholtz_z(p);
  const BLProfile dd = bl::dz(bl::dz(p));
  for (int l = 0; l <= p.degree(); ++l) {
    CHECK(std::abs(coeff_at(a, l) - (-coeff_at(dd, l) + kappa * coeff_at(p, l))) <
          1e-12);
  }
  CHECK(a.degree() == p.degree() - 1);  // leading power cancels exactly
}

TEST_CASE("profile values respect the decay envelope") {
  const double kappa = 1.0;
  const BLProfile p = profile_from({0.3, -0.7, 0.2}, kappa);
  for (double z : {0.0, 0.5, 1.0, 3.0, 8.0}) {
    double envelope = 0.0;
    for (int l = 0; l <= p.degree(); ++l) {
      envelope += std::abs(coeff_at(p, l)) * std::pow(z, l);
    }
    envelope *= std::exp(-std::sqrt(kappa) * z);
    CHECK(std::abs(eval_at(p, z)) <= envelope + 1e-15);
  }
  CHECK(std::abs(eval_at(p, 60.0)) < 1e-15);  // vanishes at infinity
}

TEST_CASE("cutoff is one near the interface and vanishes beyond the support") {
  const SmoothCutoff chi(0.25, 0.375);
  CHECK(chi(0.0) == 1.0);
  CHECK(chi(0.2) == 1.0);
  CHECK(chi(0.5) == 0.0);
  CHECK(chi.derivative(0.1, 1) == 0.0);
  CHECK(chi.derivative(0.5, 2) == 0.0);
  // smooth transition: derivative matches a finite difference
  const double t = 0.3, h = 1e-6;
  const double fd = (chi(t + h) - chi(t - h)) / (2.0 * h);
  CHECK(chi.derivative(t, 1) == doctest::Approx(fd).epsilon(1e-6));
  // high derivatives stay exactly polynomial-consistent
  const double fd2 =
      (chi.derivative(t + h, 5) - chi.derivative(t - h, 5)) / (2.0 * h);
  CHECK(chi.derivative(t, 6) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("coefficient fields track the cutoff order under derivatives") {
  const SlabGeometry geom = make_geometry(6.283185307179586, 1, 1, 1);
  Eigen::VectorXcd modes(2);
  modes << Complex(1.0, 0.0), Complex(0.5, -0.25);
  const CoefficientField c = CoefficientField::from_trace(modes);
  const CoefficientField dn = normal_derivative(c);
  CHECK(dn.max_chi_order() == 1);
  CHECK(dn.trace(1).cwiseAbs().maxCoeff() == 0.0);  // chi' vanishes at d=0

  CurvatureHooks flat;
  const CoefficientField lap = laplacian(c, geom, flat);
  CHECK(lap.max_chi_order() == 2);

  CurvatureHooks curved{0.7};
  const CoefficientField lap_curved = laplacian(c, geom, curved);
  CHECK(lap_curved.order(1).size() > 0);
  CHECK(std::abs(lap_curved.order(1)(0) - Complex(0.7, 0.0)) < 1e-15);
}
