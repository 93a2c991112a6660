#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bwkb/cutoff.hpp"
#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"

namespace bwkb {

/// Curvature callbacks of the distance function. Flat interfaces supply the
/// default (grad d constant with |grad d| = 1 built into the algebra, and
/// Delta d = 0); tests inject nonzero values to reach the curvature terms.
struct CurvatureHooks {
  double delta_d = 0.0;
};

/// Scalar coefficient field c(x) = sum_m trace_m(x) * chi^(m)(d(x)): interface
/// Fourier modes tensored with derivatives of the normal-direction cutoff.
/// The recursion only ever applies linear operations, so this family is
/// closed under everything it needs.
class CoefficientField {
public:
  CoefficientField() = default;
  static CoefficientField zero(int n_modes);
  /// trace modes at cutoff-derivative order m.
  static CoefficientField from_trace(const Eigen::VectorXcd& modes, int m = 0);

  bool is_zero(double tol = 0.0) const;
  int n_modes() const;
  int max_chi_order() const { return static_cast<int>(by_order_.size()) - 1; }

  const Eigen::VectorXcd& order(int m) const;
  Eigen::VectorXcd& mutable_order(int m, int n_modes);

  CoefficientField& operator+=(const CoefficientField& o);
  CoefficientField& operator-=(const CoefficientField& o);
  CoefficientField& operator*=(Complex s);
  friend CoefficientField operator+(CoefficientField a, const CoefficientField& b) {
    a += b;
    return a;
  }
  friend CoefficientField operator-(CoefficientField a, const CoefficientField& b) {
    a -= b;
    return a;
  }
  friend CoefficientField operator*(Complex s, CoefficientField a) {
    a *= s;
    return a;
  }

  /// Interface trace: chi(0) = 1 and all higher cutoff derivatives vanish at
  /// the interface, so only the m = 0 modes survive.
  Eigen::VectorXcd trace(int n_modes) const;

  /// Value at (x, d) for a given cutoff.
  Complex eval(const SlabGeometry& geom, const SmoothCutoff& chi, double x,
               double d) const;

  /// Per-mode value at distance d (sum over cutoff orders), mode k.
  Complex eval_mode(const SmoothCutoff& chi, int k, double d) const;

  double max_abs() const;

private:
  std::vector<Eigen::VectorXcd> by_order_;  // [m] -> modes 0..K
};

/// (grad d . grad) applied to a coefficient field: shifts the cutoff order.
CoefficientField normal_derivative(const CoefficientField& f);

/// Tangential derivative: i*xi_k per mode.
CoefficientField tangential_derivative(const CoefficientField& f,
                                       const SlabGeometry& geom);

/// Slow Laplacian of the field; includes the Delta d hook term.
CoefficientField laplacian(const CoefficientField& f, const SlabGeometry& geom,
                           const CurvatureHooks& hooks);

/// Kind of physical quantity a profile describes (used for serialization).
enum class ProfileKind { TangentialVelocity, NormalVelocity, Pressure };

/// Boundary-layer profile sum_l c_l(x) z^l exp(-sqrt(kappa) z) with exactly
/// tracked degree. Immutable by convention: operations return new profiles.
struct BLProfile {
  double sqrt_kappa = 1.0;
  std::vector<CoefficientField> coeff;  // [l] -> c_l
  Interface component = Interface::Top;
  ProfileKind kind = ProfileKind::TangentialVelocity;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  bool is_zero(double tol = 0.0) const;

  /// Value at (x, z) with the coefficient fields evaluated at distance d.
  Complex eval(const SlabGeometry& geom, const SmoothCutoff& chi, double x,
               double d, double z) const;

  /// Per-mode value at (d, z).
  Complex eval_mode(const SmoothCutoff& chi, int k, double d, double z) const;

  /// z = 0 coefficient field (the profile value at the interface).
  CoefficientField at_zero() const;

  double max_abs() const;
};

BLProfile zero_profile(double sqrt_kappa, Interface comp, ProfileKind kind);

namespace bl {

/// d/dz: c'_l = (l+1) c_{l+1} - sqrt(kappa) c_l; degree preserved.
BLProfile dz(const BLProfile& p);

/// q(x, z) = integral_z^inf p(x, s) ds, term by term from the closed form
/// int_z^inf s^l e^(-sqrt(kappa) s) ds
///   = (sum_{j<=l} l!/j! kappa^(-(l-j+1)/2) z^j) e^(-sqrt(kappa) z).
BLProfile tail_integral(const BLProfile& p);

/// Solves -f'' + kappa f = rhs, f(0) = f0, f -> 0 at infinity. The rhs has
/// degree K; the solution is (f0 + sum_i beta_i z^(i+1)) e^(-sqrt(kappa) z)
/// with gamma = M_K beta, M_K upper bidiagonal, m_ii = 2 i sqrt(kappa) and
/// m_{i,i+1} = -i(i+1) for i = 1..K+1.
BLProfile solve_layer_ode(const BLProfile& rhs, const CoefficientField& f0,
                          double kappa);

/// (-d_zz + kappa) applied through the exact coefficient recurrence
/// out_i = 2 sqrt(kappa) (i+1) c_{i+1} - (i+1)(i+2) c_{i+2}; the leading
/// power cancels identically, so the degree drops by one.
BLProfile helmholtz_z(const BLProfile& p);

/// Drops trailing coefficient fields that are exactly zero.
BLProfile trim(const BLProfile& p);

}  // namespace bl

}  // namespace bwkb
