#include <random>

#include "bwkb/errors.hpp"
#include "bwkb/geometry.hpp"
#include "doctest.h"

using namespace bwkb;

TEST_CASE("geometry layout for the unit channel") {
  const SlabGeometry g = make_geometry(2.0 * 3.141592653589793, 1.0, 1.0, 1.0);
  CHECK(g.interface_top_y() == 0.0);
  CHECK(g.interface_bottom_y() == -1.0);
  CHECK(g.wall_top_y() == 1.0);
  CHECK(g.wall_bottom_y() == -2.0);
  CHECK(g.normal_sign(Interface::Top) == 1.0);
  CHECK(g.normal_sign(Interface::Bottom) == -1.0);
}

TEST_CASE("distance to the interface set") {
  const SlabGeometry g = make_geometry(6.283185307179586, 1.0, 1.0, 1.0);
  CHECK(g.distance(-0.25) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.distance(-0.75) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.laplacian_distance() == 0.0);
}

TEST_CASE("per-component charts: unit gradient, positive distance") {
  const SlabGeometry g = make_geometry(6.283185307179586, 0.8, 1.3, 0.9);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.3 + 1e-9, -1e-9);
  for (int i = 0; i < 1000; ++i) {
    const double y = u(rng);
    if (std::abs(y + 0.65) < 1e-6) continue;  // mid-slab ridge excluded
    CHECK(g.distance(y) > 0.0);
    for (Interface comp : kInterfaces) {
      const auto grad = g.grad_chart_distance(comp);
      CHECK(std::abs(grad[0] * grad[0] + grad[1] * grad[1] - 1.0) < 1e-15);
      CHECK(g.chart_distance(comp, y) > 0.0);
    }
  }
}

TEST_CASE("grad d equals minus the outward normal on each component") {
  const SlabGeometry g = make_geometry(1.0, 1.0, 1.0, 1.0);
  CHECK(g.grad_chart_distance(Interface::Top)[1] == -1.0);
  CHECK(g.grad_chart_distance(Interface::Bottom)[1] == 1.0);
}

TEST_CASE("non-positive dimensions are rejected") {
  CHECK_THROWS_AS(make_geometry(0.0, 1, 1, 1), ConfigError);
  CHECK_THROWS_AS(make_geometry(1, -1, 1, 1), ConfigError);
  CHECK_THROWS_AS(make_geometry(1, 1, 0, 1), ConfigError);
  CHECK_THROWS_AS(make_geometry(1, 1, 1, 0), ConfigError);
}

TEST_CASE("porous region never touches the walls") {
  const SlabGeometry g = make_geometry(2.0, 0.5, 0.7, 0.4);
  CHECK(g.interface_bottom_y() > g.wall_bottom_y());
  CHECK(g.interface_top_y() < g.wall_top_y());
  CHECK(g.subdomain_of(0.25) == Subdomain::FluidTop);
  CHECK(g.subdomain_of(-0.35) == Subdomain::Porous);
  CHECK(g.subdomain_of(-0.9) == Subdomain::FluidBottom);
  CHECK_THROWS_AS(g.distance(0.25), InputError);
}
