#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <numbers>
#include <vector>

#include "bwkb/geometry.hpp"
#include "bwkb/grid1d.hpp"

namespace bwkb {

using Complex = std::complex<double>;
inline constexpr Complex kImag{0.0, 1.0};

/// One collocation grid per channel strip.
struct ChannelGrids {
  Grid1D fluid_top;
  Grid1D porous;
  Grid1D fluid_bottom;

  const Grid1D& grid(Subdomain s) const {
    switch (s) {
      case Subdomain::FluidTop: return fluid_top;
      case Subdomain::Porous: return porous;
      case Subdomain::FluidBottom: return fluid_bottom;
    }
    return porous;
  }
};

/// Grids sized so the porous strip resolves sqrt(eps/kappa)-wide layers at the
/// smallest epsilon of the run. Chebyshev endpoint clustering provides the
/// required eps^(-1/4) scaling of the porous node count.
ChannelGrids make_channel_grids(const SlabGeometry& geom, int n_points,
                                double eps_min, double kappa,
                                double layer_factor = 6.5);

/// Wavenumber of Fourier mode k on the periodic channel.
inline double wavenumber(const SlabGeometry& geom, int k) {
  return 2.0 * std::numbers::pi * k / geom.period();
}

/// Cartesian components of one interface-mode coefficient.
struct Vec2c {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};

  Vec2c operator+(const Vec2c& o) const { return {x + o.x, y + o.y}; }
  Vec2c operator-(const Vec2c& o) const { return {x - o.x, y - o.y}; }
  Vec2c operator*(Complex s) const { return {x * s, y * s}; }
};

/// Scalar field sampled per mode on each subdomain grid; modes k = 0..K with
/// the negative modes implied by conjugation (real fields).
struct ScalarFieldModes {
  std::array<std::vector<Eigen::VectorXcd>, 3> sub;

  int n_modes() const { return static_cast<int>(sub[0].size()) - 1; }
  Eigen::VectorXcd& profile(Subdomain s, int k) { return sub[static_cast<int>(s)][k]; }
  const Eigen::VectorXcd& profile(Subdomain s, int k) const {
    return sub[static_cast<int>(s)][k];
  }
};

ScalarFieldModes make_zero_scalar_field(const ChannelGrids& grids, int n_modes);

/// Complex Fourier sum over the full symmetric mode range -K..K; for
/// conjugate-symmetric data the imaginary part is roundoff.
Complex evaluate_scalar_field(const ScalarFieldModes& field,
                              const SlabGeometry& geom, const ChannelGrids& grids,
                              double x, double y);

/// Data of the transmission problems: body forces per strip plus the two
/// interface fields, all as truncated Fourier stacks.
struct ProblemData {
  int n_modes = 0;
  // volume forces: [subdomain][mode] -> nodal profile
  std::array<std::vector<Eigen::VectorXcd>, 3> gx;
  std::array<std::vector<Eigen::VectorXcd>, 3> gy;
  // interface fields: [component][mode]
  std::array<std::vector<Vec2c>, 2> h;
  std::array<std::vector<Vec2c>, 2> l;

  const Eigen::VectorXcd& gx_of(Subdomain s, int k) const { return gx[static_cast<int>(s)][k]; }
  const Eigen::VectorXcd& gy_of(Subdomain s, int k) const { return gy[static_cast<int>(s)][k]; }
  const Vec2c& h_of(Interface c, int k) const { return h[static_cast<int>(c)][k]; }
  const Vec2c& l_of(Interface c, int k) const { return l[static_cast<int>(c)][k]; }
};

ProblemData make_zero_data(const ChannelGrids& grids, int n_modes);

/// Body-force vector (gx, gy) of `data` at a volume point.
std::array<double, 2> evaluate_field(const ProblemData& data,
                                     const SlabGeometry& geom,
                                     const ChannelGrids& grids, double x, double y);

/// Interface field (h or l) of `data` at x on one interface component.
std::array<double, 2> evaluate_interface_field(
    const std::array<std::vector<Vec2c>, 2>& field, const SlabGeometry& geom,
    Interface comp, double x);

/// Parseval weight of mode k in integrals over one period (mode 0 counts
/// once, every k > 0 twice for its conjugate pair).
inline double mode_weight(int k) { return k == 0 ? 1.0 : 2.0; }

/// L2 norm squared over one subdomain from per-mode profiles.
double parseval_norm_sq(const SlabGeometry& geom, const Grid1D& grid,
                        const std::vector<Eigen::VectorXcd>& mode_profiles);

}  // namespace bwkb
