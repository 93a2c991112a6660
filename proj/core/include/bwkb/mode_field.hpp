#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"

namespace bwkb {

/// Per-mode cross-channel profiles of the velocity components and pressure on
/// the three strips.
struct ModeField {
  int k = 0;
  std::array<Eigen::VectorXcd, 3> ux;
  std::array<Eigen::VectorXcd, 3> uy;
  std::array<Eigen::VectorXcd, 3> p;

  Eigen::VectorXcd& ux_of(Subdomain s) { return ux[static_cast<int>(s)]; }
  Eigen::VectorXcd& uy_of(Subdomain s) { return uy[static_cast<int>(s)]; }
  Eigen::VectorXcd& p_of(Subdomain s) { return p[static_cast<int>(s)]; }
  const Eigen::VectorXcd& ux_of(Subdomain s) const { return ux[static_cast<int>(s)]; }
  const Eigen::VectorXcd& uy_of(Subdomain s) const { return uy[static_cast<int>(s)]; }
  const Eigen::VectorXcd& p_of(Subdomain s) const { return p[static_cast<int>(s)]; }
};

ModeField make_zero_mode_field(const ChannelGrids& grids, int k);

/// Velocity/pressure solution as a conjugate-symmetric mode stack.
///
/// Stored pressures are normalized to zero mean over the porous strip;
/// `pressure_shift` is the constant that was subtracted, so the solver-natural
/// pressure is (stored + pressure_shift).
struct SolutionPair {
  std::vector<ModeField> modes;

  double pressure_shift = 0.0;
  bool resolution_warning = false;
  double max_coefficient_tail = 0.0;
  double max_condition = 0.0;
  double max_residual = 0.0;
  /// residual of the omitted mode-0 compatibility row (elementary solver)
  double compatibility_defect = 0.0;

  int n_modes() const { return static_cast<int>(modes.size()) - 1; }
};

/// Nodal index of an interface on the adjacent fluid / porous grid.
int fluid_interface_node(const ChannelGrids& grids, Interface comp);
int porous_interface_node(const ChannelGrids& grids, Interface comp);
Subdomain fluid_subdomain(Interface comp);

/// Evaluates the field at a point by mode summation (real part).
std::array<double, 2> evaluate_velocity(const SolutionPair& sol,
                                        const SlabGeometry& geom,
                                        const ChannelGrids& grids, double x,
                                        double y);
double evaluate_pressure(const SolutionPair& sol, const SlabGeometry& geom,
                         const ChannelGrids& grids, double x, double y);

/// Mean of the pressure over the porous strip (mode-0 content only).
double porous_pressure_mean(const SolutionPair& sol, const SlabGeometry& geom,
                            const ChannelGrids& grids);

/// Subtracts the porous mean from all pressures and records it in the gauge.
void normalize_pressure_gauge(SolutionPair& sol, const SlabGeometry& geom,
                              const ChannelGrids& grids);

}  // namespace bwkb
