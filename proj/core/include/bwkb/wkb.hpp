#pragma once

#include <array>
#include <string>
#include <vector>

#include "bwkb/bl_profile.hpp"
#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"
#include "bwkb/transmission.hpp"

namespace bwkb {

/// Boundary-layer profile family of one interface component, by order.
struct ComponentLayers {
  std::vector<BLProfile> tangential;  // w_j
  std::vector<BLProfile> normal;      // nu_j
  std::vector<BLProfile> pressure;    // q_j
};

/// All expansion objects up to a requested order: outer Darcy-Stokes
/// solutions per order plus per-component boundary-layer profiles. Immutable
/// once built.
struct ExpansionBundle {
  SlabGeometry geometry{1, 1, 1, 1};
  PhysicalParams params;
  ChannelGrids grids;
  SmoothCutoff cutoff{0.25, 0.375};
  CurvatureHooks hooks;
  int order = -1;
  int n_modes = 0;

  std::vector<SolutionPair> outer;          // [j]
  std::array<ComponentLayers, 2> layers;    // per interface component
  std::vector<double> gauge_shifts;         // [j]: constant added to order j-2
  std::vector<double> trace_residuals;      // [j]: tangential trace condition
  std::vector<double> divergence_residuals; // [j]: divergence-chain identity

  const ComponentLayers& component(Interface c) const {
    return layers[static_cast<int>(c)];
  }
};

/// Creates an empty bundle bound to geometry/params/grids; the cutoff follows
/// the porous thickness (identically 1 within b/4 of each component, 0 past
/// 3b/8).
ExpansionBundle make_expansion_bundle(const SlabGeometry& geom,
                                      const PhysicalParams& params,
                                      const ChannelGrids& grids, int n_modes,
                                      const CurvatureHooks& hooks = {});

/// Order 0: outer limit problem with the original data (h = 0), the
/// tangential layer seeded by the slip mismatch, no normal layer, no layer
/// pressure.
void build_order0(ExpansionBundle& bundle, const ProblemData& data);

/// Order 1: normal layer from the divergence chain, outer problem driven by
/// the order-0 layer traces, tangential layer from the layer ODE.
void build_order1(ExpansionBundle& bundle, const ProblemData& data);

/// Generic order j >= 2, including the pressure-constant gauge step that
/// restores the compatibility of the normal-jump datum.
void build_orderj(ExpansionBundle& bundle, const ProblemData& data, int j);

/// Builds orders 0..max_order.
ExpansionBundle build_expansion(const ProblemData& data,
                                const SlabGeometry& geom,
                                const PhysicalParams& params,
                                const ChannelGrids& grids, int max_order,
                                const CurvatureHooks& hooks = {});

/// Evaluates the truncated expansion at a point for a given epsilon. In the
/// porous strip both components' layers are added at their own stretched
/// coordinates.
std::array<double, 2> evaluate_expansion_velocity(const ExpansionBundle& bundle,
                                                  double eps, double x, double y);
double evaluate_expansion_pressure(const ExpansionBundle& bundle, double eps,
                                   double x, double y);

/// The expansion truncated at `order`, sampled per mode on the grids (for
/// remainder computations).
SolutionPair evaluate_expansion_modes(const ExpansionBundle& bundle, double eps,
                                      int order);

/// Enforced degree bounds: deg w_j <= j, deg nu_j <= j-1, deg q_j <= j-2.
void check_degree_bounds(const ExpansionBundle& bundle);

/// JSON serialization of the bundle (coefficients, gauge record, residual
/// summary, degree table).
std::string bundle_to_json(const ExpansionBundle& bundle, int indent = 2);

}  // namespace bwkb
