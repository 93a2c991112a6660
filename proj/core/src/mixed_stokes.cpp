#include "bwkb/mixed_stokes.hpp"

#include "bwkb/dense_system.hpp"
#include "bwkb/errors.hpp"
#include "assembly_internal.hpp"

namespace bwkb {

namespace {

using detail::Field;

// Per-strip 3n x 3n system: momentum at interior nodes, divergence at all
// nodes, no-slip wall rows, stress rows on the interface node.
struct StripLayout {
  int n = 0;
  int idx(Field f, int node) const { return static_cast<int>(f) * n + node; }
};

void solve_strip(const MixedStokesData& data, const SlabGeometry& geom,
                 const PhysicalParams& pp, const ChannelGrids& grids,
                 Interface comp, SolutionPair& sol, int k) {
  const Subdomain s = fluid_subdomain(comp);
  const Grid1D& grid = grids.grid(s);
  const int n = grid.size();
  const StripLayout lay{n};
  const double xi = wavenumber(geom, k);
  const double sgn = geom.normal_sign(comp);
  const int fi = fluid_interface_node(grids, comp);
  const int wall = (comp == Interface::Top) ? n - 1 : 0;
  const double mu = pp.mu;

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3 * n, 3 * n);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(3 * n);

  for (int i = 1; i < n - 1; ++i) {
    const int rx = lay.idx(detail::kUx, i);
    const int ry = lay.idx(detail::kUy, i);
    for (int j = 0; j < n; ++j) {
      a(rx, lay.idx(detail::kUx, j)) += -mu * grid.diff2()(i, j);
      a(ry, lay.idx(detail::kUy, j)) += -mu * grid.diff2()(i, j);
      a(ry, lay.idx(detail::kP, j)) += grid.diff()(i, j);
    }
    a(rx, lay.idx(detail::kUx, i)) += mu * xi * xi;
    a(ry, lay.idx(detail::kUy, i)) += mu * xi * xi;
    a(rx, lay.idx(detail::kP, i)) += kImag * xi;
    b(rx) = data.gx[static_cast<int>(s)][k](i);
    b(ry) = data.gy[static_cast<int>(s)][k](i);
  }
  for (int i = 0; i < n; ++i) {
    const int r = lay.idx(detail::kP, i);
    a(r, lay.idx(detail::kUx, i)) += kImag * xi;
    for (int j = 0; j < n; ++j) {
      a(r, lay.idx(detail::kUy, j)) += grid.diff()(i, j);
    }
  }

  a(lay.idx(detail::kUx, wall), lay.idx(detail::kUx, wall)) = 1.0;
  a(lay.idx(detail::kUy, wall), lay.idx(detail::kUy, wall)) = 1.0;

  const Vec2c gamma = data.gamma[static_cast<int>(comp)][k];
  {
    const int row = lay.idx(detail::kUx, fi);
    for (int j = 0; j < n; ++j) {
      a(row, lay.idx(detail::kUx, j)) += mu * sgn * grid.diff()(fi, j);
    }
    a(row, lay.idx(detail::kUy, fi)) += mu * sgn * kImag * xi;
    b(row) = gamma.x;
  }
  {
    const int row = lay.idx(detail::kUy, fi);
    for (int j = 0; j < n; ++j) {
      a(row, lay.idx(detail::kUy, j)) += 2.0 * mu * grid.diff()(fi, j);
    }
    a(row, lay.idx(detail::kP, fi)) += -1.0;
    b(row) = sgn * gamma.y;
  }

  if (k == 0) {
    const int r = lay.idx(detail::kP, wall);
    a.row(r).setZero();
    for (int j = 0; j < n; ++j) {
      a(r, lay.idx(detail::kUy, j)) += -mu * grid.diff2()(wall, j);
      a(r, lay.idx(detail::kP, j)) += grid.diff()(wall, j);
    }
    b(r) = data.gy[static_cast<int>(s)][k](wall);
  }

  SolveInfo info;
  Eigen::VectorXcd x;
  try {
    x = solve_dense({std::move(a), std::move(b), {}}, &info);
  } catch (const SolverError& e) {
    throw SolverError(std::string("solve_mixed_stokes: ") + e.what(), k, e.pivot);
  }
  sol.max_condition = std::max(sol.max_condition, info.condition);
  sol.max_residual = std::max(sol.max_residual, info.residual);

  ModeField& f = sol.modes[k];
  f.ux_of(s) = x.segment(lay.idx(detail::kUx, 0), n);
  f.uy_of(s) = x.segment(lay.idx(detail::kUy, 0), n);
  f.p_of(s) = x.segment(lay.idx(detail::kP, 0), n);
}

}  // namespace

SolutionPair solve_mixed_stokes(const MixedStokesData& data,
                                const SlabGeometry& geom,
                                const PhysicalParams& params,
                                const ChannelGrids& grids) {
  params.validate();
  SolutionPair sol;
  sol.modes.reserve(data.n_modes + 1);
  for (int k = 0; k <= data.n_modes; ++k) {
    sol.modes.push_back(make_zero_mode_field(grids, k));
    solve_strip(data, geom, params, grids, Interface::Top, sol, k);
    solve_strip(data, geom, params, grids, Interface::Bottom, sol, k);
  }
  return sol;
}

}  // namespace bwkb
