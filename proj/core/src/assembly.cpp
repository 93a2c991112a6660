#include "bwkb/errors.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/transmission.hpp"
#include "assembly_internal.hpp"

namespace bwkb::detail {

void build_full_mode_system(const FullProblemSpec& spec, const ChannelGrids& grids,
                            int k, Eigen::MatrixXcd& a, Eigen::VectorXcd& b) {
  const SlabGeometry& geom = spec.geometry;
  const PhysicalParams& pp = spec.params;
  const ProblemData& data = spec.data;
  const double xi = wavenumber(geom, k);
  const BlockLayout lay(grids);

  a = Eigen::MatrixXcd::Zero(lay.total, lay.total);
  b = Eigen::VectorXcd::Zero(lay.total);

  for (Subdomain s : kSubdomains) {
    const Grid1D& grid = grids.grid(s);
    const bool porous = (s == Subdomain::Porous);
    const double nu = porous ? pp.eps : pp.mu;
    const double drag = porous ? pp.kappa : 0.0;
    add_momentum_rows(a, lay, s, grid, xi, nu, drag);
    add_divergence_rows(a, lay, s, grid, xi, 0, grid.size() - 1);
    for (int i = 1; i < grid.size() - 1; ++i) {
      b(lay.idx(s, kUx, i)) = data.gx_of(s, k)(i);
      b(lay.idx(s, kUy, i)) = data.gy_of(s, k)(i);
    }
  }

  add_wall_rows(a, lay, Subdomain::FluidTop, grids.fluid_top.size() - 1);
  add_wall_rows(a, lay, Subdomain::FluidBottom, 0);

  for (Interface comp : kInterfaces) {
    const double sgn = geom.normal_sign(comp);
    const Subdomain fs = fluid_subdomain(comp);
    const Grid1D& fgrid = grids.grid(fs);
    const Grid1D& pgrid = grids.porous;
    const int fi = fluid_interface_node(grids, comp);
    const int pi = porous_interface_node(grids, comp);
    const Vec2c h = data.h_of(comp, k);
    const Vec2c l = data.l_of(comp, k);

    // tangential slip condition (fluid tangential row)
    {
      const int row = lay.idx(fs, kUx, fi);
      a(row, lay.idx(fs, kUx, fi)) += pp.alpha;
      a(row, lay.idx(Subdomain::Porous, kUx, pi)) += -pp.alpha;
      add_shear_trace(a, lay, fs, fgrid, xi, row, fi, Complex(-pp.mu, 0.0), sgn);
      b(row) = -(h.x + 0.5 * l.x);
    }
    // eps-scaled normal jump (fluid normal row)
    {
      const int row = lay.idx(fs, kUy, fi);
      a(row, lay.idx(fs, kUy, fi)) += sgn / pp.eps + sgn * pp.beta / 4.0;
      a(row, lay.idx(Subdomain::Porous, kUy, pi)) +=
          -sgn / pp.eps + sgn * pp.beta / 4.0;
      add_normal_stress_trace(a, lay, fs, fgrid, row, fi, Complex(-2.0 * pp.mu, 0.0));
      a(row, lay.idx(fs, kP, fi)) += 1.0;
      b(row) = -sgn * (h.y + 0.5 * l.y);
    }
    // tangential stress balance (porous tangential row)
    {
      const int row = lay.idx(Subdomain::Porous, kUx, pi);
      add_shear_trace(a, lay, fs, fgrid, xi, row, fi, Complex(pp.mu, 0.0), sgn);
      add_shear_trace(a, lay, Subdomain::Porous, pgrid, xi, row, pi,
                      Complex(-pp.eps, 0.0), sgn);
      b(row) = l.x;
    }
    // normal stress balance (porous normal row)
    {
      const int row = lay.idx(Subdomain::Porous, kUy, pi);
      add_normal_stress_trace(a, lay, fs, fgrid, row, fi, Complex(2.0 * pp.mu, 0.0));
      a(row, lay.idx(fs, kP, fi)) += -1.0;
      add_normal_stress_trace(a, lay, Subdomain::Porous, pgrid, row, pi,
                              Complex(-2.0 * pp.eps, 0.0));
      a(row, lay.idx(Subdomain::Porous, kP, pi)) += 1.0;
      a(row, lay.idx(fs, kUy, fi)) += -sgn * pp.beta / 2.0;
      a(row, lay.idx(Subdomain::Porous, kUy, pi)) += -sgn * pp.beta / 2.0;
      b(row) = sgn * l.y;
    }
  }

  if (k == 0) {
    fix_mode0_divergence_row(a, b, lay, Subdomain::FluidTop, grids.fluid_top,
                             pp.mu, 0.0, grids.fluid_top.size() - 1,
                             data.gy_of(Subdomain::FluidTop, 0));
    fix_mode0_divergence_row(a, b, lay, Subdomain::Porous, grids.porous, pp.eps,
                             pp.kappa, 0, data.gy_of(Subdomain::Porous, 0));
    fix_mode0_divergence_row(a, b, lay, Subdomain::FluidBottom,
                             grids.fluid_bottom, pp.mu, 0.0, 0,
                             data.gy_of(Subdomain::FluidBottom, 0));
  }
}

void build_elementary_mode_system(const ElementaryProblemSpec& spec,
                                  const ChannelGrids& grids, int k,
                                  Eigen::MatrixXcd& a, Eigen::VectorXcd& b) {
  const SlabGeometry& geom = spec.geometry;
  const PhysicalParams& pp = spec.params;
  const ElementaryData& data = spec.data;
  const double xi = wavenumber(geom, k);
  const BlockLayout lay(grids);
  const Subdomain por = Subdomain::Porous;

  a = Eigen::MatrixXcd::Zero(lay.total, lay.total);
  b = Eigen::VectorXcd::Zero(lay.total);

  for (Subdomain s : {Subdomain::FluidTop, Subdomain::FluidBottom}) {
    const Grid1D& grid = grids.grid(s);
    add_momentum_rows(a, lay, s, grid, xi, pp.mu, 0.0);
    add_divergence_rows(a, lay, s, grid, xi, 0, grid.size() - 1);
    for (int i = 1; i < grid.size() - 1; ++i) {
      b(lay.idx(s, kUx, i)) = data.gx[static_cast<int>(s)][k](i);
      b(lay.idx(s, kUy, i)) = data.gy[static_cast<int>(s)][k](i);
    }
  }

  // Darcy rows at every porous node
  {
    const Grid1D& grid = grids.porous;
    const int n = grid.size();
    for (int i = 0; i < n; ++i) {
      const int rx = lay.idx(por, kUx, i);
      const int ry = lay.idx(por, kUy, i);
      a(rx, lay.idx(por, kUx, i)) += pp.kappa;
      a(rx, lay.idx(por, kP, i)) += kImag * xi;
      a(ry, lay.idx(por, kUy, i)) += pp.kappa;
      for (int j = 0; j < n; ++j) {
        a(ry, lay.idx(por, kP, j)) += grid.diff()(i, j);
      }
      b(rx) = data.gx[static_cast<int>(por)][k](i);
      b(ry) = data.gy[static_cast<int>(por)][k](i);
    }
    add_divergence_rows(a, lay, por, grid, xi, 1, n - 2);
  }

  add_wall_rows(a, lay, Subdomain::FluidTop, grids.fluid_top.size() - 1);
  add_wall_rows(a, lay, Subdomain::FluidBottom, 0);

  for (Interface comp : kInterfaces) {
    const double sgn = geom.normal_sign(comp);
    const Subdomain fs = fluid_subdomain(comp);
    const Grid1D& fgrid = grids.grid(fs);
    const int fi = fluid_interface_node(grids, comp);
    const int pi = porous_interface_node(grids, comp);
    const Complex h = data.h[static_cast<int>(comp)][k];
    const Vec2c l = data.l[static_cast<int>(comp)][k];

    // normal-velocity jump (porous divergence slot at the interface node)
    {
      const int row = lay.idx(por, kP, pi);
      a(row, lay.idx(fs, kUy, fi)) += sgn;
      a(row, lay.idx(por, kUy, pi)) += -sgn;
      b(row) = h;
    }
    // tangential stress of the fluid
    {
      const int row = lay.idx(fs, kUx, fi);
      add_shear_trace(a, lay, fs, fgrid, xi, row, fi, Complex(pp.mu, 0.0), sgn);
      b(row) = l.x;
    }
    // normal stress balanced against the Darcy pressure
    {
      const int row = lay.idx(fs, kUy, fi);
      add_normal_stress_trace(a, lay, fs, fgrid, row, fi, Complex(2.0 * pp.mu, 0.0));
      a(row, lay.idx(fs, kP, fi)) += -1.0;
      a(row, lay.idx(por, kP, pi)) += 1.0;
      a(row, lay.idx(fs, kUy, fi)) += -sgn * pp.beta / 2.0;
      a(row, lay.idx(por, kUy, pi)) += -sgn * pp.beta / 2.0;
      b(row) = sgn * l.y;
    }
  }

  if (k == 0) {
    fix_mode0_divergence_row(a, b, lay, Subdomain::FluidTop, grids.fluid_top,
                             pp.mu, 0.0, grids.fluid_top.size() - 1,
                             data.gy[0][0]);
    fix_mode0_divergence_row(a, b, lay, Subdomain::FluidBottom,
                             grids.fluid_bottom, pp.mu, 0.0, 0, data.gy[2][0]);
    // The bottom flux row is implied by compatibility; its slot carries the
    // porous pressure gauge instead, and the omitted condition is reported.
    const int row = lay.idx(por, kP, 0);
    a.row(row).setZero();
    const Grid1D& grid = grids.porous;
    for (int j = 0; j < grid.size(); ++j) {
      a(row, lay.idx(por, kP, j)) = grid.weights()(j);
    }
    b(row) = 0.0;
  }
}

}  // namespace bwkb::detail
