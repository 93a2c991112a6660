#include "bwkb/dtn.hpp"

#include <cmath>

#include "bwkb/dense_system.hpp"
#include "bwkb/errors.hpp"

namespace bwkb {

namespace {

// One Helmholtz-Neumann solve on the porous strip. Nodes ascend from the
// bottom interface (index 0) to the top interface (index n-1). Returns the
// pressure profile; for mode 0 the bottom Neumann row is replaced by the
// zero-mean gauge and `correction`/`dropped` report the compatibility
// projection and the residual of the omitted row.
Eigen::VectorXcd neumann_solve(const Grid1D& grid, double xi,
                               const Eigen::VectorXcd& div_g,
                               Complex neumann_top, Complex neumann_bottom,
                               bool mode0, double* correction, double* dropped) {
  const int n = grid.size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);

  for (int i = 1; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) += grid.diff2()(i, j);
    }
    a(i, i) += -xi * xi;
    b(i) = div_g(i);
  }

  Complex nu_top = neumann_top;        // dp/dn at the top component = +p'(0)
  Complex nu_bottom = neumann_bottom;  // dp/dn at the bottom component = -p'(-b)

  if (mode0) {
    // flux mismatch of the Neumann data against the volume source
    const Complex volume = grid.integrate(div_g);
    const Complex mismatch = nu_top + nu_bottom - volume;
    nu_top -= 0.5 * mismatch;
    nu_bottom -= 0.5 * mismatch;
    if (correction) *correction = std::max(*correction, std::abs(mismatch));
  }

  // top Neumann row: p'(y=0) = nu_top
  for (int j = 0; j < n; ++j) a(n - 1, j) = grid.diff()(n - 1, j);
  b(n - 1) = nu_top;

  if (mode0) {
    for (int j = 0; j < n; ++j) a(0, j) = grid.weights()(j);
    b(0) = 0.0;
  } else {
    // bottom Neumann row: -p'(-b) = nu_bottom
    for (int j = 0; j < n; ++j) a(0, j) = -grid.diff()(0, j);
    b(0) = nu_bottom;
  }

  const Eigen::VectorXcd p = solve_dense({std::move(a), std::move(b), {}});

  if (mode0 && dropped) {
    const Complex res = -(grid.diffc().row(0) * p)(0) - nu_bottom;
    *dropped = std::max(*dropped, std::abs(res));
  }
  return p;
}

}  // namespace

DtNOperator build_dtn(const SlabGeometry& geom, double kappa,
                      const Grid1D& porous,
                      const std::vector<Eigen::VectorXcd>& g_minus_x,
                      const std::vector<Eigen::VectorXcd>& g_minus_y) {
  if (g_minus_x.size() != g_minus_y.size() || g_minus_x.empty()) {
    throw InputError("build_dtn: inconsistent g- mode stacks");
  }
  const int n_modes = static_cast<int>(g_minus_x.size()) - 1;
  const int n = porous.size();
  const int top = n - 1, bottom = 0;

  DtNOperator op;
  op.t_.resize(n_modes + 1);
  op.affine_.resize(n_modes + 1);
  op.unit_fields_.resize(n_modes + 1);
  op.affine_fields_.resize(n_modes + 1);

  for (int k = 0; k <= n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    const bool mode0 = (k == 0);
    const Eigen::VectorXcd div_g =
        kImag * xi * g_minus_x[k] + porous.diffc() * g_minus_y[k];
    const Eigen::VectorXcd zero_div = Eigen::VectorXcd::Zero(n);

    // affine part: the g- driven solve with phi = 0
    const Complex gn_top = g_minus_y[k](top);
    const Complex gn_bottom = -g_minus_y[k](bottom);
    op.affine_fields_[k] =
        neumann_solve(porous, xi, div_g, gn_top, gn_bottom, mode0,
                      &op.mode0_correction_, &op.dropped_row_residual_);
    op.affine_[k] =
        Eigen::Vector2cd(op.affine_fields_[k](top), op.affine_fields_[k](bottom));

    // unit candidates phi = (1,0) and (0,1); Neumann data -kappa phi
    double unused = 0.0;
    op.unit_fields_[k][0] = neumann_solve(porous, xi, zero_div, -kappa, 0.0,
                                          mode0, &unused, &unused);
    op.unit_fields_[k][1] = neumann_solve(porous, xi, zero_div, 0.0, -kappa,
                                          mode0, &unused, &unused);
    for (int c = 0; c < 2; ++c) {
      op.t_[k](0, c) = op.unit_fields_[k][c](top);
      op.t_[k](1, c) = op.unit_fields_[k][c](bottom);
    }
  }
  return op;
}

InterfaceTrace DtNOperator::apply(const InterfaceTrace& phi) const {
  InterfaceTrace out;
  const int modes = n_modes();
  out[0].assign(modes + 1, Complex{});
  out[1].assign(modes + 1, Complex{});
  for (int k = 0; k <= modes; ++k) {
    const Eigen::Vector2cd p =
        t_[k] * Eigen::Vector2cd(phi[0][k], phi[1][k]) + affine_[k];
    out[0][k] = p(0);
    out[1][k] = p(1);
  }
  return out;
}

std::vector<Eigen::VectorXcd> DtNOperator::pressure_field(
    const InterfaceTrace& phi) const {
  const int modes = n_modes();
  std::vector<Eigen::VectorXcd> fields(modes + 1);
  for (int k = 0; k <= modes; ++k) {
    fields[k] = affine_fields_[k] + phi[0][k] * unit_fields_[k][0] +
                phi[1][k] * unit_fields_[k][1];
  }
  return fields;
}

}  // namespace bwkb
