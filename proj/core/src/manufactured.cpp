#include "bwkb/manufactured.hpp"

#include <random>

namespace bwkb {

namespace {

Complex sample_complex(std::mt19937& rng, double amp, bool force_real) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = amp * u(rng);
  const double im = amp * u(rng);
  return force_real ? Complex(re, 0.0) : Complex(re, im);
}

}  // namespace

ManufacturedChannelFlow::ManufacturedChannelFlow(const SlabGeometry& geom,
                                                 int n_modes, unsigned seed)
    : geom_(geom), n_modes_(n_modes) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 3.0);
  for (Subdomain s : kSubdomains) {
    auto& table = recipes_[static_cast<int>(s)];
    table.resize(n_modes + 1);
    for (int k = 0; k <= n_modes; ++k) {
      const double amp = 1.0 / (1.0 + k * k);
      ModeRecipe& r = table[k];
      const bool real0 = (k == 0);
      r.c1 = sample_complex(rng, amp, real0);
      r.c2 = sample_complex(rng, amp, real0);
      r.c3 = sample_complex(rng, amp, real0);
      r.q1 = sample_complex(rng, amp, real0);
      r.q2 = sample_complex(rng, amp, real0);
      r.omega = 0.9 + 0.35 * k + 0.2 * angle(rng);
      r.phase = angle(rng);
      r.omega_p = 1.2 + 0.25 * k + 0.2 * angle(rng);
      r.phase_p = angle(rng);
      r.sigma = 0.55 + 0.1 * angle(rng);
    }
  }
}

CJet3 ManufacturedChannelFlow::stream(Subdomain s, int k, double y) const {
  const ModeRecipe& r = recipes_[static_cast<int>(s)][k];
  const Jet3 yj = Jet3::variable(y);
  const Jet3 osc = sin(Jet3{r.omega * y + r.phase, r.omega, 0.0, 0.0});
  const Jet3 grow = exp(Jet3{r.sigma * y, r.sigma, 0.0, 0.0});

  if (s == Subdomain::Porous) {
    CJet3 f = r.c1 * CJet3(grow);
    f = f + r.c2 * CJet3(osc);
    const Jet3 lin = yj - Jet3::constant(0.5 * geom_.interface_bottom_y());
    f = f + r.c3 * CJet3(osc * lin);
    return f;
  }

  // fluid strips: double root at the wall keeps the velocity zero there
  const double wall = (s == Subdomain::FluidTop) ? geom_.wall_top_y()
                                                 : geom_.wall_bottom_y();
  const Jet3 w = yj - Jet3::constant(wall);
  const Jet3 w2 = w * w;
  CJet3 f = r.c1 * CJet3(w2);
  f = f + r.c2 * CJet3(w2 * osc);
  f = f + r.c3 * CJet3(w2 * grow);
  return f;
}

CJet3 ManufacturedChannelFlow::pressure_jet(Subdomain s, int k, double y) const {
  const ModeRecipe& r = recipes_[static_cast<int>(s)][k];
  const Jet3 osc = cos(Jet3{r.omega_p * y + r.phase_p, r.omega_p, 0.0, 0.0});
  const Jet3 grow = exp(Jet3{0.5 * y, 0.5, 0.0, 0.0});
  CJet3 p = r.q1 * CJet3(osc);
  p = p + r.q2 * CJet3(grow);
  return p;
}

Complex ManufacturedChannelFlow::ux(Subdomain s, int k, double y) const {
  return stream(s, k, y).d1;
}
Complex ManufacturedChannelFlow::uy(Subdomain s, int k, double y) const {
  const double xi = wavenumber(geom_, k);
  return -kImag * xi * stream(s, k, y).v;
}
Complex ManufacturedChannelFlow::p(Subdomain s, int k, double y) const {
  return pressure_jet(s, k, y).v;
}
Complex ManufacturedChannelFlow::dux(Subdomain s, int k, double y) const {
  return stream(s, k, y).d2;
}
Complex ManufacturedChannelFlow::duy(Subdomain s, int k, double y) const {
  const double xi = wavenumber(geom_, k);
  return -kImag * xi * stream(s, k, y).d1;
}

SolutionPair ManufacturedChannelFlow::exact_solution(
    const ChannelGrids& grids) const {
  SolutionPair sol;
  sol.modes.reserve(n_modes_ + 1);
  for (int k = 0; k <= n_modes_; ++k) {
    ModeField f = make_zero_mode_field(grids, k);
    for (Subdomain s : kSubdomains) {
      const Grid1D& grid = grids.grid(s);
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        f.ux_of(s)(i) = ux(s, k, y);
        f.uy_of(s)(i) = uy(s, k, y);
        f.p_of(s)(i) = p(s, k, y);
      }
    }
    sol.modes.push_back(std::move(f));
  }
  return sol;
}

ProblemData ManufacturedChannelFlow::full_data(const PhysicalParams& params,
                                               const ChannelGrids& grids) const {
  ProblemData data = make_zero_data(grids, n_modes_);
  const double kappa = params.kappa, mu = params.mu, eps = params.eps;
  const double alpha = params.alpha, beta = params.beta;

  for (int k = 0; k <= n_modes_; ++k) {
    const double xi = wavenumber(geom_, k);
    for (Subdomain s : kSubdomains) {
      const bool porous = (s == Subdomain::Porous);
      const double nu = porous ? eps : mu;
      const double drag = porous ? kappa : 0.0;
      const Grid1D& grid = grids.grid(s);
      auto& gx = data.gx[static_cast<int>(s)][k];
      auto& gy = data.gy[static_cast<int>(s)][k];
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        const CJet3 f = stream(s, k, y);
        const CJet3 q = pressure_jet(s, k, y);
        const Complex ux_v = f.d1, ux_dd = f.d3;
        const Complex uy_v = -kImag * xi * f.v, uy_dd = -kImag * xi * f.d2;
        gx(i) = -nu * (ux_dd - xi * xi * ux_v) + drag * ux_v + kImag * xi * q.v;
        gy(i) = -nu * (uy_dd - xi * xi * uy_v) + drag * uy_v + q.d1;
      }
    }

    for (Interface comp : kInterfaces) {
      const double sgn = geom_.normal_sign(comp);
      const double yc = geom_.interface_y(comp);
      const Subdomain fs = fluid_subdomain(comp);
      const Complex uxp = ux(fs, k, yc), uyp = uy(fs, k, yc);
      const Complex duxp = dux(fs, k, yc), duyp = duy(fs, k, yc);
      const Complex pp = p(fs, k, yc);
      const Complex uxm = ux(Subdomain::Porous, k, yc);
      const Complex uym = uy(Subdomain::Porous, k, yc);
      const Complex duxm = dux(Subdomain::Porous, k, yc);
      const Complex duym = duy(Subdomain::Porous, k, yc);
      const Complex pm = p(Subdomain::Porous, k, yc);

      Vec2c lv, hv;
      lv.x = mu * sgn * (duxp + kImag * xi * uyp) -
             eps * sgn * (duxm + kImag * xi * uym);
      lv.y = sgn * (2.0 * mu * duyp - pp - 2.0 * eps * duym + pm) -
             0.5 * beta * (uyp + uym);
      hv.x = -alpha * (uxp - uxm) + mu * sgn * (duxp + kImag * xi * uyp) -
             0.5 * lv.x;
      hv.y = -0.5 * lv.y - (uyp - uym) / eps + sgn * (2.0 * mu * duyp - pp) -
             0.25 * beta * (uyp + uym);
      data.l[static_cast<int>(comp)][k] = lv;
      data.h[static_cast<int>(comp)][k] = hv;
    }
  }
  return data;
}

ElementaryData ManufacturedChannelFlow::elementary_data(
    const PhysicalParams& params, const ChannelGrids& grids) const {
  ElementaryData data;
  data.n_modes = n_modes_;
  const double kappa = params.kappa, mu = params.mu, beta = params.beta;

  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    data.gx[static_cast<int>(s)].assign(n_modes_ + 1, Eigen::VectorXcd::Zero(n));
    data.gy[static_cast<int>(s)].assign(n_modes_ + 1, Eigen::VectorXcd::Zero(n));
  }
  for (int c = 0; c < 2; ++c) {
    data.h[c].assign(n_modes_ + 1, Complex{});
    data.l[c].assign(n_modes_ + 1, Vec2c{});
  }

  for (int k = 0; k <= n_modes_; ++k) {
    const double xi = wavenumber(geom_, k);
    for (Subdomain s : kSubdomains) {
      const bool porous = (s == Subdomain::Porous);
      const Grid1D& grid = grids.grid(s);
      auto& gx = data.gx[static_cast<int>(s)][k];
      auto& gy = data.gy[static_cast<int>(s)][k];
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        const CJet3 f = stream(s, k, y);
        const CJet3 q = pressure_jet(s, k, y);
        const Complex ux_v = f.d1, ux_dd = f.d3;
        const Complex uy_v = -kImag * xi * f.v, uy_dd = -kImag * xi * f.d2;
        if (porous) {
          gx(i) = kappa * ux_v + kImag * xi * q.v;
          gy(i) = kappa * uy_v + q.d1;
        } else {
          gx(i) = -params.mu * (ux_dd - xi * xi * ux_v) + kImag * xi * q.v;
          gy(i) = -params.mu * (uy_dd - xi * xi * uy_v) + q.d1;
        }
      }
    }

    for (Interface comp : kInterfaces) {
      const double sgn = geom_.normal_sign(comp);
      const double yc = geom_.interface_y(comp);
      const Subdomain fs = fluid_subdomain(comp);
      const Complex uyp = uy(fs, k, yc);
      const Complex duxp = dux(fs, k, yc), duyp = duy(fs, k, yc);
      const Complex pp = p(fs, k, yc);
      const Complex uym = uy(Subdomain::Porous, k, yc);
      const Complex pm = p(Subdomain::Porous, k, yc);

      data.h[static_cast<int>(comp)][k] = sgn * (uyp - uym);
      Vec2c lv;
      lv.x = mu * sgn * (duxp + kImag * xi * uyp);
      lv.y = sgn * (2.0 * mu * duyp - pp + pm) - 0.5 * beta * (uyp + uym);
      data.l[static_cast<int>(comp)][k] = lv;
    }
  }
  return data;
}

MixedStokesData ManufacturedChannelFlow::mixed_data(
    const PhysicalParams& params, const ChannelGrids& grids) const {
  MixedStokesData data;
  data.n_modes = n_modes_;
  const double mu = params.mu;
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    data.gx[static_cast<int>(s)].assign(n_modes_ + 1, Eigen::VectorXcd::Zero(n));
    data.gy[static_cast<int>(s)].assign(n_modes_ + 1, Eigen::VectorXcd::Zero(n));
  }
  for (int c = 0; c < 2; ++c) {
    data.gamma[c].assign(n_modes_ + 1, Vec2c{});
  }

  for (int k = 0; k <= n_modes_; ++k) {
    const double xi = wavenumber(geom_, k);
    for (Subdomain s : {Subdomain::FluidTop, Subdomain::FluidBottom}) {
      const Grid1D& grid = grids.grid(s);
      auto& gx = data.gx[static_cast<int>(s)][k];
      auto& gy = data.gy[static_cast<int>(s)][k];
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        const CJet3 f = stream(s, k, y);
        const CJet3 q = pressure_jet(s, k, y);
        const Complex ux_v = f.d1, ux_dd = f.d3;
        const Complex uy_v = -kImag * xi * f.v, uy_dd = -kImag * xi * f.d2;
        gx(i) = -mu * (ux_dd - xi * xi * ux_v) + kImag * xi * q.v;
        gy(i) = -mu * (uy_dd - xi * xi * uy_v) + q.d1;
      }
    }
    for (Interface comp : kInterfaces) {
      const double sgn = geom_.normal_sign(comp);
      const double yc = geom_.interface_y(comp);
      const Subdomain fs = fluid_subdomain(comp);
      Vec2c g;
      g.x = mu * sgn * (dux(fs, k, yc) + kImag * xi * uy(fs, k, yc));
      g.y = sgn * (2.0 * mu * duy(fs, k, yc) - p(fs, k, yc));
      data.gamma[static_cast<int>(comp)][k] = g;
    }
  }
  return data;
}

ProblemData make_study_data(const SlabGeometry&, const ChannelGrids& grids,
                            int n_modes, unsigned seed) {
  std::mt19937 rng(seed);
  ProblemData data = make_zero_data(grids, n_modes);
  for (int k = 0; k <= n_modes; ++k) {
    const double amp = 1.0 / (1.0 + k * k);
    const bool real0 = (k == 0);
    for (Subdomain s : kSubdomains) {
      const Grid1D& grid = grids.grid(s);
      const Complex c1 = sample_complex(rng, amp, real0);
      const Complex c2 = sample_complex(rng, amp, real0);
      const Complex c3 = sample_complex(rng, amp, real0);
      const Complex c4 = sample_complex(rng, amp, real0);
      auto& gx = data.gx[static_cast<int>(s)][k];
      auto& gy = data.gy[static_cast<int>(s)][k];
      for (int i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes()(i);
        gx(i) = c1 * std::exp(0.6 * y) + c2 * std::cos(1.1 * y);
        gy(i) = c3 * std::exp(0.4 * y) + c4 * std::sin(0.9 * y + 0.3);
      }
    }
    for (int c = 0; c < 2; ++c) {
      data.h[c][k] = Vec2c{sample_complex(rng, amp, real0),
                           sample_complex(rng, amp, real0)};
      data.l[c][k] = Vec2c{sample_complex(rng, amp, real0),
                           sample_complex(rng, amp, real0)};
    }
  }
  return data;
}

}  // namespace bwkb
