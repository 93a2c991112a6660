#include "bwkb/mode_field.hpp"

#include <cmath>

namespace bwkb {

ModeField make_zero_mode_field(const ChannelGrids& grids, int k) {
  ModeField f;
  f.k = k;
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    f.ux_of(s) = Eigen::VectorXcd::Zero(n);
    f.uy_of(s) = Eigen::VectorXcd::Zero(n);
    f.p_of(s) = Eigen::VectorXcd::Zero(n);
  }
  return f;
}

int fluid_interface_node(const ChannelGrids& grids, Interface comp) {
  return comp == Interface::Top ? 0 : grids.fluid_bottom.size() - 1;
}

int porous_interface_node(const ChannelGrids& grids, Interface comp) {
  return comp == Interface::Top ? grids.porous.size() - 1 : 0;
}

Subdomain fluid_subdomain(Interface comp) {
  return comp == Interface::Top ? Subdomain::FluidTop : Subdomain::FluidBottom;
}

std::array<double, 2> evaluate_velocity(const SolutionPair& sol,
                                        const SlabGeometry& geom,
                                        const ChannelGrids& grids, double x,
                                        double y) {
  const Subdomain s = geom.subdomain_of(y);
  const Grid1D& grid = grids.grid(s);
  Complex vx = 0.0, vy = 0.0;
  for (const ModeField& m : sol.modes) {
    const Complex cx = grid.interpolate(m.ux_of(s), y);
    const Complex cy = grid.interpolate(m.uy_of(s), y);
    const Complex phase = std::exp(kImag * (wavenumber(geom, m.k) * x));
    vx += cx * phase;
    vy += cy * phase;
    if (m.k > 0) {
      vx += std::conj(cx) * std::conj(phase);
      vy += std::conj(cy) * std::conj(phase);
    }
  }
  return {vx.real(), vy.real()};
}

double evaluate_pressure(const SolutionPair& sol, const SlabGeometry& geom,
                         const ChannelGrids& grids, double x, double y) {
  const Subdomain s = geom.subdomain_of(y);
  const Grid1D& grid = grids.grid(s);
  Complex p = 0.0;
  for (const ModeField& m : sol.modes) {
    const Complex c = grid.interpolate(m.p_of(s), y);
    const Complex phase = std::exp(kImag * (wavenumber(geom, m.k) * x));
    p += c * phase;
    if (m.k > 0) p += std::conj(c) * std::conj(phase);
  }
  return p.real();
}

double porous_pressure_mean(const SolutionPair& sol, const SlabGeometry& geom,
                            const ChannelGrids& grids) {
  if (sol.modes.empty()) return 0.0;
  const Grid1D& grid = grids.porous;
  const Complex integral = grid.integrate(sol.modes[0].p_of(Subdomain::Porous));
  const double area = geom.period() * geom.porous_thickness();
  return integral.real() * geom.period() / area;
}

void normalize_pressure_gauge(SolutionPair& sol, const SlabGeometry& geom,
                              const ChannelGrids& grids) {
  const double mean = porous_pressure_mean(sol, geom, grids);
  if (mean == 0.0) return;
  for (Subdomain s : kSubdomains) {
    sol.modes[0].p_of(s).array() -= mean;
  }
  sol.pressure_shift += mean;
}

}  // namespace bwkb
