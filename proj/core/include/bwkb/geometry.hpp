#pragma once

#include <array>
#include <cstddef>

namespace bwkb {

/// The three horizontal strips of the periodic channel, top to bottom.
enum class Subdomain : int { FluidTop = 0, Porous = 1, FluidBottom = 2 };

/// The two flat components of the fluid/porous interface.
enum class Interface : int { Top = 0, Bottom = 1 };

inline constexpr std::array<Subdomain, 3> kSubdomains = {
    Subdomain::FluidTop, Subdomain::Porous, Subdomain::FluidBottom};
inline constexpr std::array<Interface, 2> kInterfaces = {Interface::Top,
                                                         Interface::Bottom};

/// Periodic 2D channel with a porous slab embedded between two fluid strips.
///
/// Layout in y:  wall y=a | fluid | interface y=0 | porous | interface y=-b |
/// fluid | wall y=-b-c.  x is L-periodic.  The porous region never touches the
/// outer walls, so its entire boundary is the interface.
///
/// Distances to the interface are handled with one chart per component
/// (d_top = -y, d_bot = y + b); each chart is smooth up to the opposite side
/// of the slab and boundary layers are attached per component.
class SlabGeometry {
public:
  SlabGeometry(double period, double fluid_top, double porous, double fluid_bottom);

  double period() const { return period_; }
  double fluid_top_height() const { return a_; }
  double porous_thickness() const { return b_; }
  double fluid_bottom_height() const { return c_; }

  // y-coordinates of the named horizontal lines
  double wall_top_y() const { return a_; }
  double interface_top_y() const { return 0.0; }
  double interface_bottom_y() const { return -b_; }
  double wall_bottom_y() const { return -b_ - c_; }

  double interface_y(Interface comp) const {
    return comp == Interface::Top ? 0.0 : -b_;
  }

  /// Outward normal of the porous region on a component, as (n_x, n_y)=(0, s).
  double normal_sign(Interface comp) const {
    return comp == Interface::Top ? 1.0 : -1.0;
  }

  /// Distance to the interface inside the porous slab (min over components).
  double distance(double y) const;

  /// Per-component chart distance, smooth across the whole slab.
  double chart_distance(Interface comp, double y) const {
    return comp == Interface::Top ? -y : y + b_;
  }

  /// grad d for a component chart: equal to -n, so (0, -s).
  std::array<double, 2> grad_chart_distance(Interface comp) const {
    return {0.0, -normal_sign(comp)};
  }

  /// Laplacian of the distance; identically zero for flat interfaces.
  double laplacian_distance() const { return 0.0; }

  bool in_porous(double y) const { return y > -b_ && y < 0.0; }
  bool in_fluid_top(double y) const { return y > 0.0 && y < a_; }
  bool in_fluid_bottom(double y) const { return y > -b_ - c_ && y < -b_; }
  bool in_channel(double y) const { return y > -b_ - c_ && y < a_; }

  Subdomain subdomain_of(double y) const;

  std::array<double, 2> subdomain_interval(Subdomain s) const;

  /// Measure of the interface (both flat components have length `period`).
  double interface_measure() const { return 2.0 * period_; }

private:
  double period_;
  double a_;
  double b_;
  double c_;
};

SlabGeometry make_geometry(double period, double fluid_top, double porous,
                           double fluid_bottom);

}  // namespace bwkb
