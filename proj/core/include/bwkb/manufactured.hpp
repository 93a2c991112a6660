#pragma once

#include <array>
#include <vector>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/jets.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"

namespace bwkb {

/// Data of the elementary Darcy-Stokes transmission problem: the normal jump
/// h is scalar per interface mode, l is a vector field on the interface.
struct ElementaryData {
  int n_modes = 0;
  std::array<std::vector<Eigen::VectorXcd>, 3> gx;
  std::array<std::vector<Eigen::VectorXcd>, 3> gy;
  std::array<std::vector<Complex>, 2> h;
  std::array<std::vector<Vec2c>, 2> l;
};

/// Data of the mixed-boundary Stokes problem on the fluid strips.
struct MixedStokesData {
  int n_modes = 0;
  std::array<std::vector<Eigen::VectorXcd>, 3> gx;  // porous entries unused
  std::array<std::vector<Eigen::VectorXcd>, 3> gy;
  std::array<std::vector<Vec2c>, 2> gamma;
};

/// Smooth periodic fields built from per-mode stream functions (velocities
/// are divergence free by construction, fluid velocities vanish on the
/// walls). Substituting them into the transmission systems produces
/// consistent data, which makes them exact-solution oracles for the solvers.
class ManufacturedChannelFlow {
public:
  ManufacturedChannelFlow(const SlabGeometry& geom, int n_modes, unsigned seed);

  int n_modes() const { return n_modes_; }

  // exact per-mode traces and derivatives at height y
  Complex ux(Subdomain s, int k, double y) const;
  Complex uy(Subdomain s, int k, double y) const;
  Complex p(Subdomain s, int k, double y) const;
  Complex dux(Subdomain s, int k, double y) const;
  Complex duy(Subdomain s, int k, double y) const;

  /// Exact solution sampled on the grids (pressure left in its natural
  /// normalization; align gauges before comparing).
  SolutionPair exact_solution(const ChannelGrids& grids) const;

  /// Consistent data for the full epsilon-problem.
  ProblemData full_data(const PhysicalParams& params,
                        const ChannelGrids& grids) const;

  /// Consistent data for the elementary problem (porous side read as Darcy).
  ElementaryData elementary_data(const PhysicalParams& params,
                                 const ChannelGrids& grids) const;

  /// Consistent data for the mixed Stokes problem on the fluid strips.
  MixedStokesData mixed_data(const PhysicalParams& params,
                             const ChannelGrids& grids) const;

private:
  struct ModeRecipe {
    Complex c1, c2, c3;        // stream coefficients
    Complex q1, q2;            // pressure coefficients
    double omega, phase;       // oscillation of the stream
    double omega_p, phase_p;   // oscillation of the pressure
    double sigma;              // exponential rate
  };

  CJet3 stream(Subdomain s, int k, double y) const;
  CJet3 pressure_jet(Subdomain s, int k, double y) const;

  SlabGeometry geom_;
  int n_modes_;
  std::array<std::vector<ModeRecipe>, 3> recipes_;
};

/// Smooth analytic data with no attached exact solution, for the energy and
/// remainder studies. Deterministic in the seed.
ProblemData make_study_data(const SlabGeometry& geom, const ChannelGrids& grids,
                            int n_modes, unsigned seed);

}  // namespace bwkb
