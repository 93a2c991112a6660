#include "bwkb/transmission.hpp"

#include <cmath>

#include "bwkb/dense_system.hpp"
#include "bwkb/dtn.hpp"
#include "bwkb/errors.hpp"
#include "assembly_internal.hpp"

namespace bwkb {

namespace detail {
void build_full_mode_system(const FullProblemSpec&, const ChannelGrids&, int,
                            Eigen::MatrixXcd&, Eigen::VectorXcd&);
void build_elementary_mode_system(const ElementaryProblemSpec&,
                                  const ChannelGrids&, int, Eigen::MatrixXcd&,
                                  Eigen::VectorXcd&);
}  // namespace detail

namespace {

using detail::BlockLayout;
using detail::Field;

ModeField unpack_mode(const Eigen::VectorXcd& x, const BlockLayout& lay,
                      const ChannelGrids& grids, int k) {
  ModeField f = make_zero_mode_field(grids, k);
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    f.ux_of(s) = x.segment(lay.idx(s, detail::kUx, 0), n);
    f.uy_of(s) = x.segment(lay.idx(s, detail::kUy, 0), n);
    f.p_of(s) = x.segment(lay.idx(s, detail::kP, 0), n);
  }
  return f;
}

void track_info(SolutionPair& sol, const SolveInfo& info) {
  sol.max_condition = std::max(sol.max_condition, info.condition);
  sol.max_residual = std::max(sol.max_residual, info.residual);
}

void track_porous_tail(SolutionPair& sol, const ChannelGrids& grids,
                       const ModeField& f) {
  const double tail =
      std::max(grids.porous.coefficient_tail(f.ux_of(Subdomain::Porous)),
               grids.porous.coefficient_tail(f.uy_of(Subdomain::Porous)));
  sol.max_coefficient_tail = std::max(sol.max_coefficient_tail, tail);
}

double elementary_h_norm(const ElementaryData& data) {
  double sq = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= data.n_modes; ++k) {
      sq += mode_weight(k) * std::norm(data.h[c][k]);
    }
  }
  return std::sqrt(sq);
}

}  // namespace

SolutionPair solve_full(const FullProblemSpec& spec, const ChannelGrids& grids) {
  spec.params.validate();
  const BlockLayout lay(grids);
  SolutionPair sol;
  sol.modes.reserve(spec.data.n_modes + 1);

  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  for (int k = 0; k <= spec.data.n_modes; ++k) {
    detail::build_full_mode_system(spec, grids, k, a, b);
    SolveInfo info;
    Eigen::VectorXcd x;
    try {
      x = solve_dense({std::move(a), std::move(b), {}}, &info);
    } catch (const SolverError& e) {
      throw SolverError(std::string("solve_full: ") + e.what(), k, e.pivot);
    }
    ModeField f = unpack_mode(x, lay, grids, k);
    track_info(sol, info);
    track_porous_tail(sol, grids, f);
    sol.modes.push_back(std::move(f));
  }

  sol.resolution_warning = sol.max_coefficient_tail > 1e-6;
  normalize_pressure_gauge(sol, spec.geometry, grids);
  return sol;
}

SolutionPair solve_elementary(const ElementaryProblemSpec& spec,
                              const ChannelGrids& grids) {
  spec.params.validate();
  const ElementaryData& data = spec.data;

  const double hnorm = elementary_h_norm(data);
  const Complex mode0_sum = data.h[0][0] + data.h[1][0];
  if (hnorm > 0.0 && std::abs(mode0_sum) > 1e-12 * hnorm) {
    throw InputError(
        "solve_elementary: normal-jump data violates the compatibility "
        "condition (interface integral of h must vanish)");
  }

  const BlockLayout lay(grids);
  SolutionPair sol;
  sol.modes.reserve(data.n_modes + 1);

  Eigen::MatrixXcd a;
  Eigen::VectorXcd b;
  for (int k = 0; k <= data.n_modes; ++k) {
    detail::build_elementary_mode_system(spec, grids, k, a, b);
    SolveInfo info;
    Eigen::VectorXcd x;
    try {
      x = solve_dense({std::move(a), std::move(b), {}}, &info);
    } catch (const SolverError& e) {
      throw SolverError(std::string("solve_elementary: ") + e.what(), k, e.pivot);
    }
    ModeField f = unpack_mode(x, lay, grids, k);
    track_info(sol, info);

    if (k == 0) {
      // residual of the omitted bottom flux row
      const double sgn = spec.geometry.normal_sign(Interface::Bottom);
      const int fi = fluid_interface_node(grids, Interface::Bottom);
      const Complex jump =
          sgn * (f.uy_of(Subdomain::FluidBottom)(fi) - f.uy_of(Subdomain::Porous)(0));
      sol.compatibility_defect = std::abs(jump - data.h[1][0]);
    }
    sol.modes.push_back(std::move(f));
  }

  normalize_pressure_gauge(sol, spec.geometry, grids);
  return sol;
}

SolutionPair solve_elementary_via_dtn(const ElementaryProblemSpec& spec,
                                      const ChannelGrids& grids) {
  spec.params.validate();
  const SlabGeometry& geom = spec.geometry;
  const PhysicalParams& pp = spec.params;
  const ElementaryData& data = spec.data;
  const Grid1D& pgrid = grids.porous;
  const int np = pgrid.size();
  const double bth = geom.porous_thickness();

  const double hnorm = elementary_h_norm(data);
  const Complex mode0_sum = data.h[0][0] + data.h[1][0];
  if (hnorm > 0.0 && std::abs(mode0_sum) > 1e-12 * hnorm) {
    throw InputError(
        "solve_elementary_via_dtn: normal-jump data violates the "
        "compatibility condition");
  }

  // Divergence-free lifting of the normal jump: w.n = -h on both components.
  std::vector<Eigen::VectorXcd> lift_x(data.n_modes + 1),
      lift_y(data.n_modes + 1);
  std::vector<Eigen::VectorXcd> gtx(data.n_modes + 1), gty(data.n_modes + 1);
  for (int k = 0; k <= data.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    const Complex ht = data.h[0][k], hb = data.h[1][k];
    Eigen::VectorXcd wy(np), wx(np);
    for (int i = 0; i < np; ++i) {
      const double y = pgrid.nodes()(i);
      wy(i) = -ht * (1.0 + y / bth) + hb * (-y / bth);
    }
    if (k == 0) {
      wx.setZero();
    } else {
      wx.setConstant((ht + hb) / (kImag * xi * bth));
    }
    lift_x[k] = wx;
    lift_y[k] = wy;
    gtx[k] = data.gx[static_cast<int>(Subdomain::Porous)][k] - pp.kappa * wx;
    gty[k] = data.gy[static_cast<int>(Subdomain::Porous)][k] - pp.kappa * wy;
  }

  const DtNOperator dtn = build_dtn(geom, pp.kappa, pgrid, gtx, gty);

  const detail::FluidLayout lay(grids);
  SolutionPair sol;
  sol.modes.reserve(data.n_modes + 1);
  sol.compatibility_defect = dtn.mode0_correction();

  for (int k = 0; k <= data.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(lay.total, lay.total);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(lay.total);

    for (Subdomain s : {Subdomain::FluidTop, Subdomain::FluidBottom}) {
      const Grid1D& grid = grids.grid(s);
      detail::add_momentum_rows(a, lay, s, grid, xi, pp.mu, 0.0);
      detail::add_divergence_rows(a, lay, s, grid, xi, 0, grid.size() - 1);
      for (int i = 1; i < grid.size() - 1; ++i) {
        b(lay.idx(s, detail::kUx, i)) = data.gx[static_cast<int>(s)][k](i);
        b(lay.idx(s, detail::kUy, i)) = data.gy[static_cast<int>(s)][k](i);
      }
    }
    detail::add_wall_rows(a, lay, Subdomain::FluidTop, grids.fluid_top.size() - 1);
    detail::add_wall_rows(a, lay, Subdomain::FluidBottom, 0);

    for (Interface comp : kInterfaces) {
      const int ci = static_cast<int>(comp);
      const double sgn = geom.normal_sign(comp);
      const Subdomain fs = fluid_subdomain(comp);
      const Grid1D& fgrid = grids.grid(fs);
      const int fi = fluid_interface_node(grids, comp);
      const Complex h = data.h[ci][k];
      const Vec2c l = data.l[ci][k];
      const Complex lt_y = l.y - sgn * 0.5 * pp.beta * h;  // lifted datum

      {
        const int row = lay.idx(fs, detail::kUx, fi);
        detail::add_shear_trace(a, lay, fs, fgrid, xi, row, fi,
                                Complex(pp.mu, 0.0), sgn);
        b(row) = l.x;
      }
      {
        const int row = lay.idx(fs, detail::kUy, fi);
        detail::add_normal_stress_trace(a, lay, fs, fgrid, row, fi,
                                        Complex(2.0 * pp.mu, 0.0));
        a(row, lay.idx(fs, detail::kP, fi)) += -1.0;
        a(row, lay.idx(fs, detail::kUy, fi)) += -pp.beta * sgn;
        // DtN closure: + T(v+ . n) on this component
        for (Interface other : kInterfaces) {
          const int oi = static_cast<int>(other);
          const Subdomain os = fluid_subdomain(other);
          const int ofi = fluid_interface_node(grids, other);
          const double osgn = geom.normal_sign(other);
          a(row, lay.idx(os, detail::kUy, ofi)) +=
              dtn.mode_matrix(k)(ci, oi) * osgn;
        }
        b(row) = sgn * lt_y - dtn.affine(k)(ci);
      }
    }

    if (k == 0) {
      detail::fix_mode0_divergence_row(a, b, lay, Subdomain::FluidTop,
                                       grids.fluid_top, pp.mu, 0.0,
                                       grids.fluid_top.size() - 1,
                                       data.gy[0][0]);
      detail::fix_mode0_divergence_row(a, b, lay, Subdomain::FluidBottom,
                                       grids.fluid_bottom, pp.mu, 0.0, 0,
                                       data.gy[2][0]);
    }

    SolveInfo info;
    Eigen::VectorXcd x;
    try {
      x = solve_dense({std::move(a), std::move(b), {}}, &info);
    } catch (const SolverError& e) {
      throw SolverError(std::string("solve_elementary_via_dtn: ") + e.what(), k,
                        e.pivot);
    }
    track_info(sol, info);

    ModeField f = make_zero_mode_field(grids, k);
    for (Subdomain s : {Subdomain::FluidTop, Subdomain::FluidBottom}) {
      const int n = grids.grid(s).size();
      f.ux_of(s) = x.segment(lay.idx(s, detail::kUx, 0), n);
      f.uy_of(s) = x.segment(lay.idx(s, detail::kUy, 0), n);
      f.p_of(s) = x.segment(lay.idx(s, detail::kP, 0), n);
    }
    sol.modes.push_back(std::move(f));
  }

  // porous recovery through the DtN pressure field
  InterfaceTrace phi;
  phi[0].assign(data.n_modes + 1, Complex{});
  phi[1].assign(data.n_modes + 1, Complex{});
  for (int k = 0; k <= data.n_modes; ++k) {
    for (Interface comp : kInterfaces) {
      const Subdomain fs = fluid_subdomain(comp);
      const int fi = fluid_interface_node(grids, comp);
      phi[static_cast<int>(comp)][k] =
          geom.normal_sign(comp) * sol.modes[k].uy_of(fs)(fi);
    }
  }
  const std::vector<Eigen::VectorXcd> pfield = dtn.pressure_field(phi);
  for (int k = 0; k <= data.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    ModeField& f = sol.modes[k];
    f.p_of(Subdomain::Porous) = pfield[k];
    f.ux_of(Subdomain::Porous) =
        (gtx[k] - kImag * xi * pfield[k]) / pp.kappa + lift_x[k];
    f.uy_of(Subdomain::Porous) =
        (gty[k] - pgrid.diffc() * pfield[k]) / pp.kappa + lift_y[k];
  }

  normalize_pressure_gauge(sol, geom, grids);
  return sol;
}

std::array<double, 3> divergence_norms(const SolutionPair& sol,
                                       const SlabGeometry& geom,
                                       const ChannelGrids& grids) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (Subdomain s : kSubdomains) {
    const Grid1D& grid = grids.grid(s);
    double total = 0.0;
    for (const ModeField& f : sol.modes) {
      const double xi = wavenumber(geom, f.k);
      const Eigen::VectorXcd div =
          kImag * xi * f.ux_of(s) + grid.diffc() * f.uy_of(s);
      total += mode_weight(f.k) * grid.integrate(div.cwiseAbs2().eval());
    }
    out[static_cast<int>(s)] = std::sqrt(geom.period() * total);
  }
  return out;
}

double porous_curl_norm(const SolutionPair& sol, const SlabGeometry& geom,
                        const ChannelGrids& grids) {
  const Grid1D& grid = grids.porous;
  double total = 0.0;
  for (const ModeField& f : sol.modes) {
    const double xi = wavenumber(geom, f.k);
    const Eigen::VectorXcd curl = kImag * xi * f.uy_of(Subdomain::Porous) -
                                  grid.diffc() * f.ux_of(Subdomain::Porous);
    total += mode_weight(f.k) * grid.integrate(curl.cwiseAbs2().eval());
  }
  return std::sqrt(geom.period() * total);
}

}  // namespace bwkb
