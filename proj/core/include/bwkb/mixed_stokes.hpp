#pragma once

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"

namespace bwkb {

/// Stokes flow on the fluid strips with a no-slip wall and a prescribed
/// normal stress gamma on the interface: -div sigma(w,p) = g, div w = 0,
/// w = 0 on the walls, sigma(w,p) n = gamma on the interface components.
/// The porous entries of the returned solution are zero.
SolutionPair solve_mixed_stokes(const MixedStokesData& data,
                                const SlabGeometry& geom,
                                const PhysicalParams& params,
                                const ChannelGrids& grids);

}  // namespace bwkb
