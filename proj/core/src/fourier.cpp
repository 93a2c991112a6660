#include "bwkb/fourier.hpp"

#include <cmath>

#include "bwkb/errors.hpp"

namespace bwkb {

ChannelGrids make_channel_grids(const SlabGeometry& geom, int n_points,
                                double eps_min, double kappa,
                                double layer_factor) {
  if (n_points < 8) throw ConfigError("make_channel_grids: n_points < 8");
  if (!(eps_min > 0.0)) throw ConfigError("make_channel_grids: eps_min <= 0");

  const double b = geom.porous_thickness();
  const double delta = std::sqrt(eps_min / kappa);
  const int n_layer = static_cast<int>(std::ceil(layer_factor * std::sqrt(b / delta)));
  const int n_porous = std::max(n_points, n_layer);

  ChannelGrids grids;
  grids.fluid_top = build_grid({0.0, geom.wall_top_y()}, n_points);
  grids.porous = build_grid({geom.interface_bottom_y(), 0.0}, n_porous);
  grids.fluid_bottom =
      build_grid({geom.wall_bottom_y(), geom.interface_bottom_y()}, n_points);
  return grids;
}

ScalarFieldModes make_zero_scalar_field(const ChannelGrids& grids, int n_modes) {
  ScalarFieldModes f;
  for (Subdomain s : kSubdomains) {
    auto& v = f.sub[static_cast<int>(s)];
    v.assign(n_modes + 1, Eigen::VectorXcd::Zero(grids.grid(s).size()));
  }
  return f;
}

Complex evaluate_scalar_field(const ScalarFieldModes& field,
                              const SlabGeometry& geom, const ChannelGrids& grids,
                              double x, double y) {
  const Subdomain s = geom.subdomain_of(y);
  const Grid1D& grid = grids.grid(s);
  const auto& profiles = field.sub[static_cast<int>(s)];
  Complex sum = 0.0;
  for (int k = 0; k < static_cast<int>(profiles.size()); ++k) {
    const Complex coeff = grid.interpolate(profiles[k], y);
    const double xi = wavenumber(geom, k);
    const Complex phase = std::exp(kImag * (xi * x));
    sum += coeff * phase;
    if (k > 0) sum += std::conj(coeff) * std::conj(phase);
  }
  return sum;
}

ProblemData make_zero_data(const ChannelGrids& grids, int n_modes) {
  ProblemData d;
  d.n_modes = n_modes;
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    d.gx[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
    d.gy[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
  }
  for (int c = 0; c < 2; ++c) {
    d.h[c].assign(n_modes + 1, Vec2c{});
    d.l[c].assign(n_modes + 1, Vec2c{});
  }
  return d;
}

std::array<double, 2> evaluate_field(const ProblemData& data,
                                     const SlabGeometry& geom,
                                     const ChannelGrids& grids, double x,
                                     double y) {
  const Subdomain s = geom.subdomain_of(y);
  const Grid1D& grid = grids.grid(s);
  Complex fx = 0.0, fy = 0.0;
  for (int k = 0; k <= data.n_modes; ++k) {
    const Complex cx = grid.interpolate(data.gx_of(s, k), y);
    const Complex cy = grid.interpolate(data.gy_of(s, k), y);
    const Complex phase = std::exp(kImag * (wavenumber(geom, k) * x));
    fx += cx * phase;
    fy += cy * phase;
    if (k > 0) {
      fx += std::conj(cx) * std::conj(phase);
      fy += std::conj(cy) * std::conj(phase);
    }
  }
  return {fx.real(), fy.real()};
}

std::array<double, 2> evaluate_interface_field(
    const std::array<std::vector<Vec2c>, 2>& field, const SlabGeometry& geom,
    Interface comp, double x) {
  const auto& modes = field[static_cast<int>(comp)];
  Complex fx = 0.0, fy = 0.0;
  for (int k = 0; k < static_cast<int>(modes.size()); ++k) {
    const Complex phase = std::exp(kImag * (wavenumber(geom, k) * x));
    fx += modes[k].x * phase;
    fy += modes[k].y * phase;
    if (k > 0) {
      fx += std::conj(modes[k].x) * std::conj(phase);
      fy += std::conj(modes[k].y) * std::conj(phase);
    }
  }
  return {fx.real(), fy.real()};
}

double parseval_norm_sq(const SlabGeometry& geom, const Grid1D& grid,
                        const std::vector<Eigen::VectorXcd>& mode_profiles) {
  double total = 0.0;
  for (int k = 0; k < static_cast<int>(mode_profiles.size()); ++k) {
    total += mode_weight(k) * grid.integrate(mode_profiles[k].cwiseAbs2().eval());
  }
  return geom.period() * total;
}

}  // namespace bwkb
