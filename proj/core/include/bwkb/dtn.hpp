#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"

namespace bwkb {

/// Trace of a scalar interface quantity: [component][mode].
using InterfaceTrace = std::array<std::vector<Complex>, 2>;

/// Dirichlet-to-Neumann map of the porous pressure: for a normal-velocity
/// trace candidate phi it returns the trace of p solving
///   Laplace p = div g-  in the porous strip,
///   dp/dn = g- . n - kappa phi on both interface components,
/// with zero mean. Per mode the map is a 2x2 complex matrix plus an affine
/// part carried by g-. For mode 0 the Neumann data are projected onto the
/// compatible subspace and the correction magnitude is recorded.
class DtNOperator {
public:
  int n_modes() const { return static_cast<int>(t_.size()) - 1; }

  const Eigen::Matrix2cd& mode_matrix(int k) const { return t_[k]; }
  const Eigen::Vector2cd& affine(int k) const { return affine_[k]; }

  /// Magnitude of the mode-0 compatibility projection of the affine solve.
  double mode0_correction() const { return mode0_correction_; }
  /// Residual of the Neumann row not used in the gauged mode-0 solve.
  double dropped_row_residual() const { return dropped_row_residual_; }

  /// Pressure trace for the candidate phi (affine map).
  InterfaceTrace apply(const InterfaceTrace& phi) const;

  /// The full porous pressure field behind apply(), by mode.
  std::vector<Eigen::VectorXcd> pressure_field(const InterfaceTrace& phi) const;

  friend DtNOperator build_dtn(const SlabGeometry& geom, double kappa,
                               const Grid1D& porous,
                               const std::vector<Eigen::VectorXcd>& g_minus_x,
                               const std::vector<Eigen::VectorXcd>& g_minus_y);

private:
  std::vector<Eigen::Matrix2cd> t_;
  std::vector<Eigen::Vector2cd> affine_;
  std::vector<std::array<Eigen::VectorXcd, 2>> unit_fields_;
  std::vector<Eigen::VectorXcd> affine_fields_;
  double mode0_correction_ = 0.0;
  double dropped_row_residual_ = 0.0;
};

/// Builds the per-mode DtN operator for the porous strip and body force g-.
DtNOperator build_dtn(const SlabGeometry& geom, double kappa,
                      const Grid1D& porous,
                      const std::vector<Eigen::VectorXcd>& g_minus_x,
                      const std::vector<Eigen::VectorXcd>& g_minus_y);

/// Applies the operator (kept as a free function mirroring the module API).
inline InterfaceTrace dtn_apply(const DtNOperator& op, const InterfaceTrace& phi) {
  return op.apply(phi);
}

}  // namespace bwkb
