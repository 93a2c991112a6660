#include <cmath>
#include <random>

#include "bwkb/errors.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/transmission.hpp"
#include "bwkb/verification.hpp"
#include "doctest.h"

using namespace bwkb;

namespace {

constexpr double kTwoPi = 6.283185307179586;

struct Setup {
  SlabGeometry geom = make_geometry(kTwoPi, 1.0, 1.0, 1.0);
  PhysicalParams params;
  Setup() {
    params.kappa = 1.0;
    params.mu = 1.0;
    params.alpha = 1.0;
    params.beta = 1.0;
    params.eps = 0.1;
  }
};

double max_mode_error(const SolutionPair& a, const SolutionPair& b) {
  double err = 0.0;
  for (std::size_t k = 0; k < a.modes.size(); ++k) {
    for (Subdomain s : kSubdomains) {
      err = std::max(err, (a.modes[k].ux_of(s) - b.modes[k].ux_of(s))
                              .cwiseAbs()
                              .maxCoeff());
      err = std::max(err, (a.modes[k].uy_of(s) - b.modes[k].uy_of(s))
                              .cwiseAbs()
                              .maxCoeff());
    }
  }
  return err;
}

double max_pressure_error(const SolutionPair& a, const SolutionPair& b) {
  double err = 0.0;
  for (std::size_t k = 0; k < a.modes.size(); ++k) {
    for (Subdomain s : kSubdomains) {
      err = std::max(err,
                     (a.modes[k].p_of(s) - b.modes[k].p_of(s)).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

ElementaryData zero_elementary_data(const ChannelGrids& grids, int n_modes) {
  ElementaryData data;
  data.n_modes = n_modes;
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    data.gx[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
    data.gy[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
  }
  for (int c = 0; c < 2; ++c) {
    data.h[c].assign(n_modes + 1, Complex{});
    data.l[c].assign(n_modes + 1, Vec2c{});
  }
  return data;
}

}  // namespace

TEST_CASE("full problem: zero data gives the zero solution") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 24, su.params.eps, 1.0);
  const ProblemData data = make_zero_data(grids, 2);
  const SolutionPair sol = solve_full({su.geom, su.params, data}, grids);
  for (const ModeField& m : sol.modes) {
    for (Subdomain s : kSubdomains) {
      CHECK(m.ux_of(s).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.uy_of(s).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.p_of(s).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("full problem recovers the manufactured solution at eps = 0.1") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 48, su.params.eps, 1.0);
  const ManufacturedChannelFlow flow(su.geom, 3, 2024);
  const ProblemData data = flow.full_data(su.params, grids);
  const SolutionPair sol = solve_full({su.geom, su.params, data}, grids);

  SolutionPair exact = flow.exact_solution(grids);
  normalize_pressure_gauge(exact, su.geom, grids);

  CHECK(max_mode_error(sol, exact) < 1e-8);
  CHECK(max_pressure_error(sol, exact) < 1e-8);
  CHECK(sol.max_residual < 1e-10);
}

TEST_CASE("full problem: discrete divergence stays below 1e-9") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 48, su.params.eps, 1.0);
  const ManufacturedChannelFlow flow(su.geom, 3, 11);
  const ProblemData data = flow.full_data(su.params, grids);
  const SolutionPair sol = solve_full({su.geom, su.params, data}, grids);
  const auto div = divergence_norms(sol, su.geom, grids);
  for (double d : div) CHECK(d < 1e-9);
}

TEST_CASE("full problem satisfies the weak-form energy identity") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 48, su.params.eps, 1.0);
  const ManufacturedChannelFlow flow(su.geom, 3, 5);
  const ProblemData data = flow.full_data(su.params, grids);
  const SolutionPair sol = solve_full({su.geom, su.params, data}, grids);
  const EnergyIdentity id = energy_identity(sol, data, su.geom, su.params, grids);
  CHECK(std::abs(id.bilinear - id.load) <=
        1e-8 * std::max(std::abs(id.bilinear), std::abs(id.load)));
}

TEST_CASE("energy coercivity stays uniformly bounded in eps") {
  const Setup su;
  const std::vector<double> eps_list{1e-1, 1e-2, 1e-3};
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u}) {
    const ChannelGrids grids =
        make_channel_grids(su.geom, 32, eps_list.back(), su.params.kappa);
    const ProblemData data = make_study_data(su.geom, grids, 2, seed);
    const auto reports = energy_check(data, su.geom, su.params, eps_list, grids);
    double max_ratio = 0.0, min_ratio = 1e300;
    for (const auto& r : reports) {
      REQUIRE(r.applicable);
      max_ratio = std::max(max_ratio, r.ratio);
      min_ratio = std::min(min_ratio, r.ratio);
    }
    CHECK(max_ratio < 100.0);            // one empirical constant for all seeds
    CHECK(max_ratio / min_ratio < 5.0);  // no growth trend across eps
  }
}

TEST_CASE("elementary problem: zero data gives the zero solution") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 24, 1.0, 1.0);
  const ElementaryData data = zero_elementary_data(grids, 2);
  const SolutionPair sol = solve_elementary({su.geom, su.params, data}, grids);
  for (const ModeField& m : sol.modes) {
    for (Subdomain s : kSubdomains) {
      CHECK(m.ux_of(s).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.uy_of(s).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.p_of(s).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("elementary problem: gradient forcing is absorbed by the pressure") {
  // g- = grad q with q = cos(x) e^y (mean zero over the slab), g+ = 0,
  // l = +q n, h = 0  =>  v = 0 and the porous pressure equals q.
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 32, 1.0, 1.0);
  ElementaryData data = zero_elementary_data(grids, 2);
  const Grid1D& pg = grids.porous;
  for (int i = 0; i < pg.size(); ++i) {
    const double ey = std::exp(pg.nodes()(i));
    // mode-1 coefficient of cos(x) e^y is e^y / 2; xi = 1 on this channel
    data.gx[1][1](i) = Complex(0.0, 0.5) * ey;
    data.gy[1][1](i) = 0.5 * ey;
  }
  for (Interface comp : kInterfaces) {
    const double sgn = su.geom.normal_sign(comp);
    const double yc = su.geom.interface_y(comp);
    const Complex qhat = 0.5 * std::exp(yc);
    data.l[static_cast<int>(comp)][1] = Vec2c{Complex{}, sgn * qhat};
  }

  const SolutionPair sol = solve_elementary({su.geom, su.params, data}, grids);
  for (const ModeField& m : sol.modes) {
    for (Subdomain s : kSubdomains) {
      CHECK(m.ux_of(s).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(m.uy_of(s).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  for (int i = 0; i < pg.size(); ++i) {
    const Complex expected = 0.5 * std::exp(pg.nodes()(i));
    CHECK(std::abs(sol.modes[1].p_of(Subdomain::Porous)(i) - expected) < 1e-9);
  }
}

TEST_CASE("elementary problem recovers a manufactured Darcy-Stokes pair") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 48, 1.0, 1.0);
  const ManufacturedChannelFlow flow(su.geom, 3, 321);
  const ElementaryData data = flow.elementary_data(su.params, grids);
  const SolutionPair sol = solve_elementary({su.geom, su.params, data}, grids);

  SolutionPair exact = flow.exact_solution(grids);
  normalize_pressure_gauge(exact, su.geom, grids);

  CHECK(max_mode_error(sol, exact) < 1e-8);
  CHECK(max_pressure_error(sol, exact) < 1e-8);
  CHECK(sol.compatibility_defect < 1e-9);
}

TEST_CASE("elementary problem rejects incompatible normal jumps") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 24, 1.0, 1.0);
  ElementaryData data = zero_elementary_data(grids, 0);
  data.h[0][0] = 0.3;  // net flux through a closed interface
  data.h[1][0] = 0.0;
  CHECK_THROWS_AS(solve_elementary({su.geom, su.params, data}, grids), InputError);
}

TEST_CASE("curl-free porous forcing produces a curl-free Darcy velocity") {
  const Setup su;
  const ChannelGrids grids = make_channel_grids(su.geom, 32, 1.0, 1.0);
  ElementaryData data = zero_elementary_data(grids, 2);
  const Grid1D& pg = grids.porous;
  for (int i = 0; i < pg.size(); ++i) {
    const double y = pg.nodes()(i);
    // grad of q = sin(2x) cosh(y): mode-2 coefficient -(i/2) cosh(y)
    data.gx[1][2](i) = Complex(0.0, 2.0) * Complex(0.0, -0.5) * std::cosh(y);
    data.gy[1][2](i) = Complex(0.0, -0.5) * std::sinh(y);
  }
  const SolutionPair sol = solve_elementary({su.geom, su.params, data}, grids);
  CHECK(porous_curl_norm(sol, su.geom, grids) < 1e-8);
}

TEST_CASE("full solver flags an unresolved porous layer") {
  Setup su;
  su.params.eps = 1e-6;
  // generic data develop a layer; the grid is sized for eps = 0.1
  const ChannelGrids grids = make_channel_grids(su.geom, 16, 1e-1, 1.0);
  const ProblemData data = make_study_data(su.geom, grids, 2, 4);
  const SolutionPair sol = solve_full({su.geom, su.params, data}, grids);
  CHECK(sol.resolution_warning);

  // and a resolved run of the same data stays quiet
  Setup res;
  res.params.eps = 0.1;
  const ChannelGrids fine = make_channel_grids(su.geom, 48, 0.1, 1.0);
  const ProblemData fdata = make_study_data(su.geom, fine, 2, 4);
  const SolutionPair ok = solve_full({res.geom, res.params, fdata}, fine);
  CHECK_FALSE(ok.resolution_warning);
}
