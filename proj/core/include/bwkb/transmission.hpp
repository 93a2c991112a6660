#pragma once

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"

namespace bwkb {

/// The full epsilon-problem: Brinkman strip coupled to the Stokes strips by
/// the jump conditions, with data (g, h, l).
struct FullProblemSpec {
  SlabGeometry geometry;
  PhysicalParams params;
  ProblemData data;
};

/// The elementary Darcy-Stokes transmission problem solved at every
/// expansion order. h must satisfy the closed-interface compatibility
/// condition (its mode-0 components cancel between the two components).
struct ElementaryProblemSpec {
  SlabGeometry geometry;
  PhysicalParams params;  // eps unused
  ElementaryData data;
};

/// Solves the full problem mode by mode. Interior residuals of the momentum
/// and divergence equations hold at collocation accuracy; the interface rows
/// impose the stress balance, the tangential slip condition and the
/// epsilon-scaled normal jump; the velocity vanishes on the walls. Pressures
/// are returned in the zero-porous-mean normalization with the applied shift
/// recorded.
SolutionPair solve_full(const FullProblemSpec& spec, const ChannelGrids& grids);

/// Solves the elementary problem mode by mode (monolithic assembly). The
/// porous strip carries the Darcy operator; the remaining pressure constant
/// is fixed by the zero-porous-mean gauge. Rejects data whose mode-0 normal
/// jump violates the compatibility condition.
SolutionPair solve_elementary(const ElementaryProblemSpec& spec,
                              const ChannelGrids& grids);

/// Same problem through the Dirichlet-to-Neumann reduction: a divergence-free
/// lifting of the normal jump, the porous pressure eliminated by the DtN map,
/// a coupled solve on the two fluid strips, then recovery of the porous
/// fields. Must agree with solve_elementary to solver accuracy.
SolutionPair solve_elementary_via_dtn(const ElementaryProblemSpec& spec,
                                      const ChannelGrids& grids);

/// Discrete divergence of a solution, reported as the quadrature norm per
/// subdomain (total over modes, Parseval weighted).
std::array<double, 3> divergence_norms(const SolutionPair& sol,
                                       const SlabGeometry& geom,
                                       const ChannelGrids& grids);

/// Discrete curl norm over the porous strip.
double porous_curl_norm(const SolutionPair& sol, const SlabGeometry& geom,
                        const ChannelGrids& grids);

}  // namespace bwkb
