#include <cmath>
#include <random>

#include "bwkb/dtn.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/transmission.hpp"
#include "doctest.h"

using namespace bwkb;

namespace {

constexpr double kTwoPi = 6.283185307179586;

SlabGeometry unit_geom() { return make_geometry(kTwoPi, 1.0, 1.0, 1.0); }

std::vector<Eigen::VectorXcd> zero_modes(const Grid1D& grid, int n_modes) {
  return std::vector<Eigen::VectorXcd>(n_modes + 1,
                                       Eigen::VectorXcd::Zero(grid.size()));
}

InterfaceTrace zero_trace(int n_modes) {
  InterfaceTrace t;
  t[0].assign(n_modes + 1, Complex{});
  t[1].assign(n_modes + 1, Complex{});
  return t;
}

}  // namespace

TEST_CASE("zero data and zero candidate give a zero trace") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = make_channel_grids(geom, 32, 1.0, 1.0);
  const DtNOperator op = build_dtn(geom, 1.0, grids.porous,
                                   zero_modes(grids.porous, 2),
                                   zero_modes(grids.porous, 2));
  const InterfaceTrace out = op.apply(zero_trace(2));
  for (int c = 0; c < 2; ++c) {
    for (const Complex& v : out[c]) CHECK(std::abs(v) < 1e-13);
  }
}

TEST_CASE("mode-1 trace matches the closed-form slab solution") {
  // slab (-1, 0), kappa = 1, xi = 1, phi = (1, 0):
  // p = A cosh(xi (y + 1/2)) + B sinh(xi (y + 1/2)) with
  // p'(0) = -kappa, p'(-1) = 0.
  const SlabGeometry geom = unit_geom();
  const double kappa = 1.0, xi = 1.0, b = 1.0;
  const ChannelGrids grids = make_channel_grids(geom, 40, 1.0, kappa);
  const DtNOperator op = build_dtn(geom, kappa, grids.porous,
                                   zero_modes(grids.porous, 1),
                                   zero_modes(grids.porous, 1));
  InterfaceTrace phi = zero_trace(1);
  phi[0][1] = 1.0;
  const InterfaceTrace out = op.apply(phi);

  const double ah = xi * b / 2.0;
  const double a_coef = -kappa / (2.0 * xi * std::sinh(ah));
  const double b_coef = -kappa / (2.0 * xi * std::cosh(ah));
  const double p_top = a_coef * std::cosh(ah) + b_coef * std::sinh(ah);
  const double p_bot = a_coef * std::cosh(ah) - b_coef * std::sinh(ah);

  CHECK(std::abs(out[0][1] - p_top) < 1e-10);
  CHECK(std::abs(out[1][1] - p_bot) < 1e-10);
}

TEST_CASE("the map is affine: subtracting the affine part is linear") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = make_channel_grids(geom, 32, 1.0, 1.0);
  const ManufacturedChannelFlow flow(geom, 2, 77);
  const PhysicalParams params;
  const ElementaryData data = flow.elementary_data(params, grids);
  const DtNOperator op = build_dtn(geom, 1.0, grids.porous,
                                   data.gx[static_cast<int>(Subdomain::Porous)],
                                   data.gy[static_cast<int>(Subdomain::Porous)]);

  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  InterfaceTrace phi1 = zero_trace(2), phi2 = zero_trace(2), sum = zero_trace(2);
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= 2; ++k) {
      phi1[c][k] = Complex(u(rng), k == 0 ? 0.0 : u(rng));
      phi2[c][k] = Complex(u(rng), k == 0 ? 0.0 : u(rng));
      sum[c][k] = phi1[c][k] + phi2[c][k];
    }
  }
  const InterfaceTrace t0 = op.apply(zero_trace(2));
  const InterfaceTrace t1 = op.apply(phi1);
  const InterfaceTrace t2 = op.apply(phi2);
  const InterfaceTrace ts = op.apply(sum);
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= 2; ++k) {
      const Complex lin = (ts[c][k] - t0[c][k]) -
                          ((t1[c][k] - t0[c][k]) + (t2[c][k] - t0[c][k]));
      CHECK(std::abs(lin) < 1e-12);
    }
  }
}

TEST_CASE("applying the operator twice gives identical output") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = make_channel_grids(geom, 24, 1.0, 1.0);
  const DtNOperator op = build_dtn(geom, 2.0, grids.porous,
                                   zero_modes(grids.porous, 1),
                                   zero_modes(grids.porous, 1));
  InterfaceTrace phi = zero_trace(1);
  phi[0][1] = Complex(0.4, -0.3);
  phi[1][0] = 0.25;
  phi[0][0] = -0.25;
  const InterfaceTrace a = op.apply(phi);
  const InterfaceTrace b = op.apply(phi);
  for (int c = 0; c < 2; ++c) {
    for (std::size_t k = 0; k < a[c].size(); ++k) {
      CHECK(a[c][k] == b[c][k]);
    }
  }
}

TEST_CASE("composed elementary solve equals the monolithic assembly") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = make_channel_grids(geom, 40, 1.0, 1.0);
  PhysicalParams params;
  params.kappa = 1.3;
  params.mu = 0.8;
  params.alpha = 1.1;
  params.beta = 0.9;

  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    ElementaryData data;
    data.n_modes = 2;
    for (Subdomain s : kSubdomains) {
      const Grid1D& grid = grids.grid(s);
      data.gx[static_cast<int>(s)].assign(3, Eigen::VectorXcd::Zero(grid.size()));
      data.gy[static_cast<int>(s)].assign(3, Eigen::VectorXcd::Zero(grid.size()));
      for (int k = 0; k <= 2; ++k) {
        const Complex c1(u(rng), k == 0 ? 0.0 : u(rng));
        const Complex c2(u(rng), k == 0 ? 0.0 : u(rng));
        for (int i = 0; i < grid.size(); ++i) {
          const double y = grid.nodes()(i);
          data.gx[static_cast<int>(s)][k](i) = c1 * std::exp(0.5 * y);
          data.gy[static_cast<int>(s)][k](i) = c2 * std::cos(1.2 * y);
        }
      }
    }
    for (int c = 0; c < 2; ++c) {
      data.h[c].assign(3, Complex{});
      data.l[c].assign(3, Vec2c{});
      for (int k = 0; k <= 2; ++k) {
        data.h[c][k] = Complex(u(rng), k == 0 ? 0.0 : u(rng));
        data.l[c][k] = Vec2c{Complex(u(rng), k == 0 ? 0.0 : u(rng)),
                             Complex(u(rng), k == 0 ? 0.0 : u(rng))};
      }
    }
    // enforce the closed-interface compatibility of the mode-0 jump
    data.h[1][0] = -data.h[0][0];

    const SolutionPair mono = solve_elementary({geom, params, data}, grids);
    const SolutionPair composed =
        solve_elementary_via_dtn({geom, params, data}, grids);

    double err = 0.0;
    for (int k = 0; k <= 2; ++k) {
      for (Subdomain s : kSubdomains) {
        err = std::max(err, (mono.modes[k].ux_of(s) - composed.modes[k].ux_of(s))
                                .cwiseAbs()
                                .maxCoeff());
        err = std::max(err, (mono.modes[k].uy_of(s) - composed.modes[k].uy_of(s))
                                .cwiseAbs()
                                .maxCoeff());
        err = std::max(err, (mono.modes[k].p_of(s) - composed.modes[k].p_of(s))
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
    CHECK(err < 1e-8);
  }
}
