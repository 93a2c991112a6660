#include "bwkb/geometry.hpp"

#include <cmath>
#include <string>

#include "bwkb/errors.hpp"

namespace bwkb {

SlabGeometry::SlabGeometry(double period, double fluid_top, double porous,
                           double fluid_bottom)
    : period_(period), a_(fluid_top), b_(porous), c_(fluid_bottom) {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError(std::string("geometry: ") + name +
                        " must be positive and finite");
    }
  };
  check(period, "period L");
  check(fluid_top, "fluid height a");
  check(porous, "porous thickness b");
  check(fluid_bottom, "fluid height c");
}

double SlabGeometry::distance(double y) const {
  if (!in_porous(y)) {
    throw InputError("distance: point is not inside the porous slab");
  }
  return std::min(-y, y + b_);
}

Subdomain SlabGeometry::subdomain_of(double y) const {
  if (in_fluid_top(y)) return Subdomain::FluidTop;
  if (in_porous(y)) return Subdomain::Porous;
  if (in_fluid_bottom(y)) return Subdomain::FluidBottom;
  throw InputError("subdomain_of: point outside the open subdomains");
}

std::array<double, 2> SlabGeometry::subdomain_interval(Subdomain s) const {
  switch (s) {
    case Subdomain::FluidTop:
      return {0.0, a_};
    case Subdomain::Porous:
      return {-b_, 0.0};
    case Subdomain::FluidBottom:
      return {-b_ - c_, -b_};
  }
  throw InternalError("subdomain_interval: bad enum");
}

SlabGeometry make_geometry(double period, double fluid_top, double porous,
                           double fluid_bottom) {
  return SlabGeometry(period, fluid_top, porous, fluid_bottom);
}

}  // namespace bwkb
