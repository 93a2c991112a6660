#pragma once

// Shared per-mode assembly pieces of the channel solvers. Internal to core.

#include <Eigen/Dense>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"

namespace bwkb::detail {

// Field index inside a subdomain block.
enum Field : int { kUx = 0, kUy = 1, kP = 2 };

// Column/row layout of the stacked per-mode system over the three strips.
struct BlockLayout {
  std::array<int, 3> offset{};
  std::array<int, 3> n{};
  int total = 0;

  explicit BlockLayout(const ChannelGrids& grids) {
    int pos = 0;
    for (Subdomain s : kSubdomains) {
      const int i = static_cast<int>(s);
      n[i] = grids.grid(s).size();
      offset[i] = pos;
      pos += 3 * n[i];
    }
    total = pos;
  }

  int idx(Subdomain s, Field f, int node) const {
    const int i = static_cast<int>(s);
    return offset[i] + static_cast<int>(f) * n[i] + node;
  }
};

// Layout over the two fluid strips only (DtN-reduced system).
struct FluidLayout {
  std::array<int, 3> offset{-1, -1, -1};
  std::array<int, 3> n{};
  int total = 0;

  explicit FluidLayout(const ChannelGrids& grids) {
    int pos = 0;
    for (Subdomain s : {Subdomain::FluidTop, Subdomain::FluidBottom}) {
      const int i = static_cast<int>(s);
      n[i] = grids.grid(s).size();
      offset[i] = pos;
      pos += 3 * n[i];
    }
    total = pos;
  }

  int idx(Subdomain s, Field f, int node) const {
    const int i = static_cast<int>(s);
    return offset[i] + static_cast<int>(f) * n[i] + node;
  }
};

// Second-order momentum rows at interior nodes:
//   nu (xi^2 - D2) u + drag u + grad p = g.
template <typename Layout>
void add_momentum_rows(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                       const Grid1D& grid, double xi, double nu, double drag) {
  const int n = grid.size();
  const auto& d1 = grid.diff();
  const auto& d2 = grid.diff2();
  for (int i = 1; i < n - 1; ++i) {
    const int rx = lay.idx(s, kUx, i);
    const int ry = lay.idx(s, kUy, i);
    for (int j = 0; j < n; ++j) {
      a(rx, lay.idx(s, kUx, j)) += -nu * d2(i, j);
      a(ry, lay.idx(s, kUy, j)) += -nu * d2(i, j);
      a(ry, lay.idx(s, kP, j)) += d1(i, j);
    }
    a(rx, lay.idx(s, kUx, i)) += nu * xi * xi + drag;
    a(ry, lay.idx(s, kUy, i)) += nu * xi * xi + drag;
    a(rx, lay.idx(s, kP, i)) += kImag * xi;
  }
}

// The same momentum-y row at a single node (used to repair the redundant
// mode-0 divergence row).
template <typename Layout>
void add_momentum_y_row_at(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                           const Grid1D& grid, double xi, double nu, double drag,
                           int row, int i) {
  const int n = grid.size();
  for (int j = 0; j < n; ++j) {
    a(row, lay.idx(s, kUy, j)) += -nu * grid.diff2()(i, j);
    a(row, lay.idx(s, kP, j)) += grid.diff()(i, j);
  }
  a(row, lay.idx(s, kUy, i)) += nu * xi * xi + drag;
}

// Divergence rows i*xi ux + D uy = 0 at nodes [first, last].
template <typename Layout>
void add_divergence_rows(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                         const Grid1D& grid, double xi, int first, int last) {
  const int n = grid.size();
  for (int i = first; i <= last; ++i) {
    const int r = lay.idx(s, kP, i);
    a(r, lay.idx(s, kUx, i)) += kImag * xi;
    for (int j = 0; j < n; ++j) {
      a(r, lay.idx(s, kUy, j)) += grid.diff()(i, j);
    }
  }
}

template <typename Layout>
void add_wall_rows(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                   int node) {
  a(lay.idx(s, kUx, node), lay.idx(s, kUx, node)) = 1.0;
  a(lay.idx(s, kUy, node), lay.idx(s, kUy, node)) = 1.0;
}

// For mode 0 the divergence rows of a strip are rank deficient by one (the
// derivative of the interpolant ignores constants); the row at `node` is
// implied by the others and is replaced by the momentum-y equation there.
template <typename Layout>
void fix_mode0_divergence_row(Eigen::MatrixXcd& a, Eigen::VectorXcd& b,
                              const Layout& lay, Subdomain s, const Grid1D& grid,
                              double nu, double drag, int node,
                              const Eigen::VectorXcd& gy) {
  const int r = lay.idx(s, kP, node);
  a.row(r).setZero();
  add_momentum_y_row_at(a, lay, s, grid, 0.0, nu, drag, r, node);
  b(r) = gy(node);
}

// Tangential part of 2 mu d(v) n of a fluid strip, added with `scale`:
//   scale * s * (D ux + i xi uy) at the interface node.
template <typename Layout>
void add_shear_trace(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                     const Grid1D& grid, double xi, int row, int node,
                     Complex scale, double sgn) {
  const int n = grid.size();
  for (int j = 0; j < n; ++j) {
    a(row, lay.idx(s, kUx, j)) += scale * sgn * grid.diff()(node, j);
  }
  a(row, lay.idx(s, kUy, node)) += scale * sgn * kImag * xi;
}

// Normal-normal part 2 nu (d(v) n) . n = 2 nu D uy, added with `scale`.
template <typename Layout>
void add_normal_stress_trace(Eigen::MatrixXcd& a, const Layout& lay, Subdomain s,
                             const Grid1D& grid, int row, int node,
                             Complex scale) {
  const int n = grid.size();
  for (int j = 0; j < n; ++j) {
    a(row, lay.idx(s, kUy, j)) += scale * grid.diff()(node, j);
  }
}

}  // namespace bwkb::detail
