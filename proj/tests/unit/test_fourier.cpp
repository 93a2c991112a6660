#include <cmath>
#include <random>

#include "bwkb/errors.hpp"
#include "bwkb/fourier.hpp"
#include "doctest.h"

using namespace bwkb;

namespace {

SlabGeometry unit_geom() { return make_geometry(6.283185307179586, 1, 1, 1); }

ChannelGrids unit_grids() { return make_channel_grids(unit_geom(), 16, 0.1, 1.0); }

}  // namespace

TEST_CASE("constant mode-0 profile evaluates to the constant") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = unit_grids();
  ScalarFieldModes f = make_zero_scalar_field(grids, 2);
  for (Subdomain s : kSubdomains) {
    f.profile(s, 0).setConstant(3.5);
  }
  CHECK(evaluate_scalar_field(f, geom, grids, 1.3, 0.4).real() ==
        doctest::Approx(3.5).epsilon(1e-14));
  CHECK(evaluate_scalar_field(f, geom, grids, -2.0, -1.7).real() ==
        doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("half coefficient at mode one gives cos x") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = unit_grids();
  ScalarFieldModes f = make_zero_scalar_field(grids, 2);
  for (Subdomain s : kSubdomains) {
    f.profile(s, 1).setConstant(0.5);
  }
  for (double x : {0.0, 0.7, 2.9}) {
    CHECK(evaluate_scalar_field(f, geom, grids, x, -0.3).real() ==
          doctest::Approx(std::cos(x)).epsilon(1e-13));
  }
}

TEST_CASE("five-mode field agrees with a direct trigonometric sum") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = unit_grids();
  const int n_modes = 5;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  ScalarFieldModes f = make_zero_scalar_field(grids, n_modes);
  // per-mode polynomial profiles with known closed form
  std::array<std::array<Complex, n_modes + 1>, 2> poly{};
  for (int k = 0; k <= n_modes; ++k) {
    poly[0][k] = (k == 0) ? Complex(u(rng), 0.0) : Complex(u(rng), u(rng));
    poly[1][k] = (k == 0) ? Complex(u(rng), 0.0) : Complex(u(rng), u(rng));
    for (Subdomain s : kSubdomains) {
      const Grid1D& grid = grids.grid(s);
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        f.profile(s, k)(i) = poly[0][k] + poly[1][k] * y;
      }
    }
  }

  std::mt19937 prng(17);
  std::uniform_real_distribution<double> px(0.0, geom.period());
  std::uniform_real_distribution<double> py(-1.99, 0.99);
  for (int trial = 0; trial < 20; ++trial) {
    const double x = px(prng);
    double y = py(prng);
    if (std::abs(y) < 1e-6 || std::abs(y + 1.0) < 1e-6) y += 0.01;
    const Complex got = evaluate_scalar_field(f, geom, grids, x, y);

    Complex expected = 0.0;
    for (int k = 0; k <= n_modes; ++k) {
      const Complex coeff = poly[0][k] + poly[1][k] * y;
      const Complex phase = std::exp(Complex(0, 1) * (wavenumber(geom, k) * x));
      expected += coeff * phase;
      if (k > 0) expected += std::conj(coeff) * std::conj(phase);
    }
    CHECK(std::abs(got - expected) < 1e-13);
  }
}

TEST_CASE("conjugate-symmetric data evaluate to real values") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = unit_grids();
  ScalarFieldModes f = make_zero_scalar_field(grids, 4);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double magnitude = 0.0;
  for (int k = 0; k <= 4; ++k) {
    for (Subdomain s : kSubdomains) {
      const Complex c = (k == 0) ? Complex(u(rng), 0.0) : Complex(u(rng), u(rng));
      f.profile(s, k).setConstant(c);
      magnitude = std::max(magnitude, std::abs(c));
    }
  }
  for (double x : {0.1, 1.0, 4.4}) {
    const Complex v = evaluate_scalar_field(f, geom, grids, x, -0.4);
    CHECK(std::abs(v.imag()) <= 1e-12 * std::max(magnitude, std::abs(v.real())));
  }
}

TEST_CASE("evaluate_field rejects points outside the channel") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids grids = unit_grids();
  const ProblemData data = make_zero_data(grids, 2);
  CHECK_THROWS_AS(evaluate_field(data, geom, grids, 0.0, 5.0), InputError);
}

TEST_CASE("porous grid scales with the layer width") {
  const SlabGeometry geom = unit_geom();
  const ChannelGrids coarse = make_channel_grids(geom, 16, 1e-1, 1.0);
  const ChannelGrids fine = make_channel_grids(geom, 16, 1e-5, 1.0);
  CHECK(fine.porous.size() > coarse.porous.size());
  CHECK(coarse.fluid_top.size() == fine.fluid_top.size());
}
