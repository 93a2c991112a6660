#include "bwkb/wkb.hpp"

#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {

using Json = nlohmann::json;

// ---- small profile combinators -------------------------------------------

BLProfile map_coeffs(const BLProfile& p,
                     const std::function<CoefficientField(const CoefficientField&)>& op) {
  BLProfile out = zero_profile(p.sqrt_kappa, p.component, p.kind);
  out.coeff.reserve(p.coeff.size());
  for (const auto& c : p.coeff) out.coeff.push_back(op(c));
  return out;
}

BLProfile add_profiles(const BLProfile& a, const BLProfile& b) {
  BLProfile out = a.coeff.size() >= b.coeff.size() ? a : b;
  const BLProfile& small = a.coeff.size() >= b.coeff.size() ? b : a;
  for (std::size_t l = 0; l < small.coeff.size(); ++l) {
    if (out.coeff[l].n_modes() < 0) {
      out.coeff[l] = small.coeff[l];
    } else if (small.coeff[l].n_modes() >= 0) {
      out.coeff[l] += small.coeff[l];
    }
  }
  return out;
}

BLProfile scale_profile(const BLProfile& p, Complex s) {
  BLProfile out = p;
  for (auto& c : out.coeff) c *= s;
  return out;
}

// Divergence of the layer field w tau + nu n in the slow variables.
BLProfile layer_divergence(const BLProfile& w, const BLProfile& nu,
                           const SlabGeometry& geom, const CurvatureHooks& hooks) {
  BLProfile div = map_coeffs(
      w, [&](const CoefficientField& c) { return tangential_derivative(c, geom); });
  BLProfile normal_part = map_coeffs(nu, [&](const CoefficientField& c) {
    CoefficientField d = normal_derivative(c);
    if (hooks.delta_d != 0.0) d += Complex(hooks.delta_d, 0.0) * c;
    return d;
  });
  return bl::trim(add_profiles(div, scale_profile(normal_part, Complex(-1.0, 0.0))));
}

// ---- outer-solution traces -------------------------------------------------

struct OuterTraces {
  Eigen::VectorXcd uxp, uyp, duxp, duyp, pp;  // fluid side
  Eigen::VectorXcd uxm, uym, duxm, duym, pm;  // porous side
};

OuterTraces outer_traces(const SolutionPair& sol, const ChannelGrids& grids,
                         Interface comp) {
  const int n_modes = sol.n_modes();
  const Subdomain fs = fluid_subdomain(comp);
  const Grid1D& fgrid = grids.grid(fs);
  const Grid1D& pgrid = grids.porous;
  const int fi = fluid_interface_node(grids, comp);
  const int pi = porous_interface_node(grids, comp);

  OuterTraces t;
  for (auto* v : {&t.uxp, &t.uyp, &t.duxp, &t.duyp, &t.pp, &t.uxm, &t.uym,
                  &t.duxm, &t.duym, &t.pm}) {
    v->resize(n_modes + 1);
  }
  for (int k = 0; k <= n_modes; ++k) {
    const ModeField& f = sol.modes[k];
    t.uxp(k) = f.ux_of(fs)(fi);
    t.uyp(k) = f.uy_of(fs)(fi);
    t.pp(k) = f.p_of(fs)(fi);
    t.duxp(k) = (fgrid.diffc().row(fi) * f.ux_of(fs))(0);
    t.duyp(k) = (fgrid.diffc().row(fi) * f.uy_of(fs))(0);
    t.uxm(k) = f.ux_of(Subdomain::Porous)(pi);
    t.uym(k) = f.uy_of(Subdomain::Porous)(pi);
    t.pm(k) = f.p_of(Subdomain::Porous)(pi);
    t.duxm(k) = (pgrid.diffc().row(pi) * f.ux_of(Subdomain::Porous))(0);
    t.duym(k) = (pgrid.diffc().row(pi) * f.uy_of(Subdomain::Porous))(0);
  }
  return t;
}

ElementaryData zero_elementary(const ChannelGrids& grids, int n_modes) {
  ElementaryData e;
  e.n_modes = n_modes;
  for (Subdomain s : kSubdomains) {
    const int n = grids.grid(s).size();
    e.gx[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
    e.gy[static_cast<int>(s)].assign(n_modes + 1, Eigen::VectorXcd::Zero(n));
  }
  for (int c = 0; c < 2; ++c) {
    e.h[c].assign(n_modes + 1, Complex{});
    e.l[c].assign(n_modes + 1, Vec2c{});
  }
  return e;
}

// Boundary value of the tangential layer: the slip mismatch of order j.
Eigen::VectorXcd slip_mismatch(const ExpansionBundle& bundle,
                               const OuterTraces& t, Interface comp,
                               const ProblemData* data0) {
  const SlabGeometry& geom = bundle.geometry;
  const PhysicalParams& pp = bundle.params;
  const double sgn = geom.normal_sign(comp);
  Eigen::VectorXcd f0(bundle.n_modes + 1);
  for (int k = 0; k <= bundle.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    Complex v = (t.uxp(k) - t.uxm(k)) -
                (pp.mu / pp.alpha) * sgn * (t.duxp(k) + kImag * xi * t.uyp(k));
    if (data0) {
      const Vec2c h = data0->h_of(comp, k);
      const Vec2c l = data0->l_of(comp, k);
      v += (h.x + 0.5 * l.x) / pp.alpha;
    }
    f0(k) = v;
  }
  return f0;
}

double tangential_trace_residual(const ExpansionBundle& bundle,
                                 const OuterTraces& t, const BLProfile& w,
                                 Interface comp, const ProblemData* data0) {
  const SlabGeometry& geom = bundle.geometry;
  const PhysicalParams& pp = bundle.params;
  const double sgn = geom.normal_sign(comp);
  const Eigen::VectorXcd w0 = w.at_zero().trace(bundle.n_modes);
  double worst = 0.0;
  for (int k = 0; k <= bundle.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    Complex r = pp.alpha * (t.uxp(k) - t.uxm(k) - w0(k)) -
                pp.mu * sgn * (t.duxp(k) + kImag * xi * t.uyp(k));
    if (data0) {
      const Vec2c h = data0->h_of(comp, k);
      const Vec2c l = data0->l_of(comp, k);
      r += h.x + 0.5 * l.x;
    }
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

// Tangential-layer right-hand side of order j (empty profile at order 0).
BLProfile tangential_rhs(const ExpansionBundle& bundle, Interface comp, int j) {
  const auto& lay = bundle.component(comp);
  const SlabGeometry& geom = bundle.geometry;
  const CurvatureHooks& hooks = bundle.hooks;
  const double sk = bundle.params.sqrt_kappa();
  BLProfile rhs = zero_profile(sk, comp, ProfileKind::TangentialVelocity);
  if (j < 1) return rhs;

  // -(grad q_j)_tau
  rhs = add_profiles(rhs, scale_profile(map_coeffs(lay.pressure[j],
                                                   [&](const CoefficientField& c) {
                                                     return tangential_derivative(c, geom);
                                                   }),
                                        Complex(-1.0, 0.0)));
  // 2 (grad d . grad) dz w_{j-1} + Delta d dz w_{j-1}
  const BLProfile dzw = bl::dz(lay.tangential[j - 1]);
  rhs = add_profiles(rhs, scale_profile(map_coeffs(dzw, normal_derivative),
                                        Complex(2.0, 0.0)));
  if (hooks.delta_d != 0.0) {
    rhs = add_profiles(rhs, scale_profile(dzw, Complex(hooks.delta_d, 0.0)));
  }
  // + Laplacian w_{j-2}
  if (j >= 2) {
    rhs = add_profiles(rhs, map_coeffs(lay.tangential[j - 2],
                                       [&](const CoefficientField& c) {
                                         return laplacian(c, geom, hooks);
                                       }));
  }
  return bl::trim(rhs);
}

// Layer-pressure integrand of (d/dz) q_j for order j >= 2.
BLProfile pressure_integrand(const ExpansionBundle& bundle, Interface comp, int j) {
  const auto& lay = bundle.component(comp);
  const SlabGeometry& geom = bundle.geometry;
  const CurvatureHooks& hooks = bundle.hooks;
  const double sk = bundle.params.sqrt_kappa();
  BLProfile integrand = zero_profile(sk, comp, ProfileKind::Pressure);

  integrand = add_profiles(integrand, bl::helmholtz_z(lay.normal[j - 1]));
  integrand = add_profiles(
      integrand, scale_profile(map_coeffs(lay.pressure[j - 1], normal_derivative),
                               Complex(-1.0, 0.0)));
  const BLProfile dznu = bl::dz(lay.normal[j - 2]);
  integrand = add_profiles(integrand,
                           scale_profile(map_coeffs(dznu, normal_derivative),
                                         Complex(-2.0, 0.0)));
  if (hooks.delta_d != 0.0) {
    integrand = add_profiles(integrand,
                             scale_profile(dznu, Complex(-hooks.delta_d, 0.0)));
  }
  if (j >= 3) {
    integrand = add_profiles(
        integrand, scale_profile(map_coeffs(lay.normal[j - 3],
                                            [&](const CoefficientField& c) {
                                              return laplacian(c, geom, hooks);
                                            }),
                                 Complex(-1.0, 0.0)));
  }
  return bl::trim(integrand);
}

void append_outer(ExpansionBundle& bundle, const ElementaryData& data) {
  ElementaryProblemSpec spec{bundle.geometry, bundle.params, data};
  bundle.outer.push_back(solve_elementary(spec, bundle.grids));
}

void check_order_degrees(const ExpansionBundle& bundle, int j) {
  // an empty profile (degree -1) satisfies every bound
  const auto ok = [](const BLProfile& p, int bound) {
    return p.degree() <= std::max(bound, -1);
  };
  for (Interface comp : kInterfaces) {
    const auto& lay = bundle.component(comp);
    if (!ok(lay.tangential[j], j) || !ok(lay.normal[j], j - 1) ||
        !ok(lay.pressure[j], j - 2)) {
      throw InternalError("wkb: profile degree bound violated at order " +
                          std::to_string(j));
    }
  }
}

// Divergence-chain residual: dz nu_{j+1} - div(layer_j) must vanish.
double divergence_chain_residual(const ExpansionBundle& bundle, int j) {
  double worst = 0.0;
  for (Interface comp : kInterfaces) {
    const auto& lay = bundle.component(comp);
    if (j + 1 >= static_cast<int>(lay.normal.size())) continue;
    const BLProfile lhs = bl::dz(lay.normal[j + 1]);
    const BLProfile div = layer_divergence(lay.tangential[j], lay.normal[j],
                                           bundle.geometry, bundle.hooks);
    const BLProfile diff = add_profiles(lhs, scale_profile(div, Complex(-1.0, 0.0)));
    worst = std::max(worst, diff.max_abs());
  }
  return worst;
}

void build_order_impl(ExpansionBundle& bundle, const ProblemData& data, int j) {
  if (j != bundle.order + 1) {
    throw InternalError("wkb: orders must be built consecutively");
  }
  const SlabGeometry& geom = bundle.geometry;
  const PhysicalParams& pp = bundle.params;
  const ChannelGrids& grids = bundle.grids;
  const double sk = pp.sqrt_kappa();
  const int n_modes = bundle.n_modes;

  for (Interface comp : kInterfaces) {
    auto& lay = bundle.layers[static_cast<int>(comp)];
    lay.tangential.resize(j + 1,
                          zero_profile(sk, comp, ProfileKind::TangentialVelocity));
    lay.normal.resize(j + 1, zero_profile(sk, comp, ProfileKind::NormalVelocity));
    lay.pressure.resize(j + 1, zero_profile(sk, comp, ProfileKind::Pressure));
    lay.tangential[j].component = comp;
    lay.normal[j].component = comp;
    lay.pressure[j].component = comp;
  }

  // Layer pressure and normal layer of this order (independent of the outer
  // solve of this order).
  if (j >= 1) {
    for (Interface comp : kInterfaces) {
      auto& lay = bundle.layers[static_cast<int>(comp)];
      const BLProfile div = layer_divergence(lay.tangential[j - 1],
                                             lay.normal[j - 1], geom, bundle.hooks);
      lay.normal[j] = bl::trim(scale_profile(bl::tail_integral(div), Complex(-1.0, 0.0)));
      lay.normal[j].kind = ProfileKind::NormalVelocity;
      if (j >= 2) {
        const BLProfile integrand = pressure_integrand(bundle, comp, j);
        lay.pressure[j] = bl::trim(
            scale_profile(bl::tail_integral(integrand), Complex(-1.0, 0.0)));
        lay.pressure[j].kind = ProfileKind::Pressure;
      }
    }
  }

  // Data of the outer problem of this order.
  ElementaryData elem = zero_elementary(grids, n_modes);
  if (j == 0) {
    for (Subdomain s : kSubdomains) {
      elem.gx[static_cast<int>(s)] = data.gx[static_cast<int>(s)];
      elem.gy[static_cast<int>(s)] = data.gy[static_cast<int>(s)];
    }
    for (int c = 0; c < 2; ++c) elem.l[c] = data.l[c];
  } else {
    if (j >= 2) {
      // porous body force: Laplacian of the order-(j-2) porous velocity
      const Grid1D& pgrid = grids.porous;
      const int pidx = static_cast<int>(Subdomain::Porous);
      for (int k = 0; k <= n_modes; ++k) {
        const double xi = wavenumber(geom, k);
        const ModeField& prev = bundle.outer[j - 2].modes[k];
        elem.gx[pidx][k] = pgrid.diff2c() * prev.ux_of(Subdomain::Porous) -
                           xi * xi * prev.ux_of(Subdomain::Porous);
        elem.gy[pidx][k] = pgrid.diff2c() * prev.uy_of(Subdomain::Porous) -
                           xi * xi * prev.uy_of(Subdomain::Porous);
      }
    }

    for (Interface comp : kInterfaces) {
      const int ci = static_cast<int>(comp);
      auto& lay = bundle.layers[ci];
      const double sgn = geom.normal_sign(comp);

      const Eigen::VectorXcd dzw =
          bl::dz(lay.tangential[j - 1]).at_zero().trace(n_modes);
      const Eigen::VectorXcd dznu =
          bl::dz(lay.normal[j - 1]).at_zero().trace(n_modes);
      const Eigen::VectorXcd nuj0 = lay.normal[j].at_zero().trace(n_modes);
      const Eigen::VectorXcd qj0 = lay.pressure[j].at_zero().trace(n_modes);

      Eigen::VectorXcd slow_shear = Eigen::VectorXcd::Zero(n_modes + 1);
      OuterTraces prev;
      Eigen::VectorXcd numm20 = Eigen::VectorXcd::Zero(n_modes + 1);
      if (j >= 2) {
        prev = outer_traces(bundle.outer[j - 2], grids, comp);
        const CoefficientField w0field = lay.tangential[j - 2].at_zero();
        const CoefficientField nu0field = lay.normal[j - 2].at_zero();
        CoefficientField shear = tangential_derivative(nu0field, geom);
        shear -= normal_derivative(w0field);
        slow_shear = shear.trace(n_modes);
        numm20 = nu0field.trace(n_modes);
      }

      for (int k = 0; k <= n_modes; ++k) {
        const double xi = wavenumber(geom, k);
        Complex lx = -dzw(k);
        Complex lnormal = -2.0 * dznu(k) + 0.5 * pp.beta * nuj0(k) - qj0(k);
        Complex h = nuj0(k);
        if (j >= 2) {
          lx += sgn * (prev.duxm(k) + kImag * xi * prev.uym(k)) + slow_shear(k);
          lnormal += 2.0 * prev.duym(k);
          h += 2.0 * pp.mu * prev.duyp(k) - prev.pp(k) -
               0.25 * pp.beta *
                   (sgn * (prev.uyp(k) + prev.uym(k)) + numm20(k));
        }
        if (j == 2) {
          const Vec2c h0 = data.h_of(comp, k);
          const Vec2c l0 = data.l_of(comp, k);
          h += -sgn * (h0.y + 0.5 * l0.y);
        }
        elem.l[ci][k] = Vec2c{lx, sgn * lnormal};
        elem.h[ci][k] = h;
      }
    }

    // Gauge step: one constant added to the order-(j-2) pressure pair makes
    // the mode-0 normal-jump datum compatible across the two components.
    double shift = 0.0;
    if (j >= 2) {
      const Complex sum = elem.h[0][0] + elem.h[1][0];
      shift = 0.5 * sum.real();
      if (shift != 0.0) {
        SolutionPair& prev = bundle.outer[j - 2];
        for (Subdomain s : kSubdomains) {
          prev.modes[0].p_of(s).array() += shift;
        }
        prev.pressure_shift -= shift;
        elem.h[0][0] -= shift;
        elem.h[1][0] -= shift;
      }
    }
    bundle.gauge_shifts.push_back(shift);
  }
  if (j == 0) bundle.gauge_shifts.push_back(0.0);

  append_outer(bundle, elem);

  // Tangential layer of this order.
  double trace_res = 0.0;
  for (Interface comp : kInterfaces) {
    auto& lay = bundle.layers[static_cast<int>(comp)];
    const OuterTraces t = outer_traces(bundle.outer[j], grids, comp);
    const ProblemData* data0 = (j == 0) ? &data : nullptr;
    const Eigen::VectorXcd f0 = slip_mismatch(bundle, t, comp, data0);
    const BLProfile rhs = tangential_rhs(bundle, comp, j);
    lay.tangential[j] =
        bl::trim(bl::solve_layer_ode(rhs, CoefficientField::from_trace(f0), pp.kappa));
    lay.tangential[j].component = comp;
    lay.tangential[j].kind = ProfileKind::TangentialVelocity;
    trace_res = std::max(trace_res,
                         tangential_trace_residual(bundle, t, lay.tangential[j],
                                                   comp, data0));
  }

  bundle.order = j;
  bundle.trace_residuals.push_back(trace_res);
  bundle.divergence_residuals.push_back(
      j >= 1 ? divergence_chain_residual(bundle, j - 1) : 0.0);
  check_order_degrees(bundle, j);
}

}  // namespace

ExpansionBundle make_expansion_bundle(const SlabGeometry& geom,
                                      const PhysicalParams& params,
                                      const ChannelGrids& grids, int n_modes,
                                      const CurvatureHooks& hooks) {
  const double b = geom.porous_thickness();
  // Contact order 6 keeps the cutoff derivatives the recursion reaches
  // (order m <= k+2 <= 6 for the default studies) continuous while keeping
  // their maxima as small as the pinned transition width allows.
  ExpansionBundle bundle{geom,
                         params,
                         grids,
                         SmoothCutoff(0.25 * b, 0.375 * b, 6),
                         hooks,
                         -1,
                         n_modes,
                         {},
                         {},
                         {},
                         {},
                         {}};
  return bundle;
}

void build_order0(ExpansionBundle& bundle, const ProblemData& data) {
  build_order_impl(bundle, data, 0);
}

void build_order1(ExpansionBundle& bundle, const ProblemData& data) {
  build_order_impl(bundle, data, 1);
}

void build_orderj(ExpansionBundle& bundle, const ProblemData& data, int j) {
  if (j < 2) throw InputError("build_orderj: j must be >= 2");
  build_order_impl(bundle, data, j);
}

ExpansionBundle build_expansion(const ProblemData& data, const SlabGeometry& geom,
                                const PhysicalParams& params,
                                const ChannelGrids& grids, int max_order,
                                const CurvatureHooks& hooks) {
  if (max_order < 0 || max_order > 6) {
    throw ConfigError("build_expansion: order must lie in [0, 6]");
  }
  ExpansionBundle bundle = make_expansion_bundle(geom, params, grids,
                                                 data.n_modes, hooks);
  for (int j = 0; j <= max_order; ++j) {
    build_order_impl(bundle, data, j);
  }
  return bundle;
}

std::array<double, 2> evaluate_expansion_velocity(const ExpansionBundle& bundle,
                                                  double eps, double x, double y) {
  const SlabGeometry& geom = bundle.geometry;
  const double root_eps = std::sqrt(eps);
  Complex vx = 0.0, vy = 0.0;

  const Subdomain sub = geom.subdomain_of(y);
  const Grid1D& grid = bundle.grids.grid(sub);
  double weight = 1.0;
  for (int j = 0; j <= bundle.order; ++j, weight *= root_eps) {
    for (const ModeField& m : bundle.outer[j].modes) {
      const Complex cx = grid.interpolate(m.ux_of(sub), y);
      const Complex cy = grid.interpolate(m.uy_of(sub), y);
      const Complex phase = std::exp(kImag * (wavenumber(geom, m.k) * x));
      vx += weight * (cx * phase + (m.k > 0 ? std::conj(cx * phase) : 0.0));
      vy += weight * (cy * phase + (m.k > 0 ? std::conj(cy * phase) : 0.0));
    }
  }

  if (sub == Subdomain::Porous) {
    for (Interface comp : kInterfaces) {
      const auto& lay = bundle.component(comp);
      const double d = geom.chart_distance(comp, y);
      const double z = d / root_eps;
      const double sgn = geom.normal_sign(comp);
      weight = 1.0;
      for (int j = 0; j <= bundle.order; ++j, weight *= root_eps) {
        // tangential and normal layer contributions (real part by symmetry)
        const Complex wt = lay.tangential[j].eval(geom, bundle.cutoff, x, d, z);
        const Complex nv = lay.normal[j].eval(geom, bundle.cutoff, x, d, z);
        vx += weight * wt;
        vy += weight * sgn * nv;
      }
    }
  }
  return {vx.real(), vy.real()};
}

double evaluate_expansion_pressure(const ExpansionBundle& bundle, double eps,
                                   double x, double y) {
  const SlabGeometry& geom = bundle.geometry;
  const double root_eps = std::sqrt(eps);
  Complex p = 0.0;
  const Subdomain sub = geom.subdomain_of(y);
  const Grid1D& grid = bundle.grids.grid(sub);
  double weight = 1.0;
  for (int j = 0; j <= bundle.order; ++j, weight *= root_eps) {
    for (const ModeField& m : bundle.outer[j].modes) {
      const Complex c = grid.interpolate(m.p_of(sub), y);
      const Complex phase = std::exp(kImag * (wavenumber(geom, m.k) * x));
      p += weight * (c * phase + (m.k > 0 ? std::conj(c * phase) : 0.0));
    }
  }
  if (sub == Subdomain::Porous) {
    for (Interface comp : kInterfaces) {
      const auto& lay = bundle.component(comp);
      const double d = geom.chart_distance(comp, y);
      const double z = d / root_eps;
      weight = 1.0;
      for (int j = 0; j <= bundle.order; ++j, weight *= root_eps) {
        p += weight * lay.pressure[j].eval(geom, bundle.cutoff, x, d, z);
      }
    }
  }
  return p.real();
}

SolutionPair evaluate_expansion_modes(const ExpansionBundle& bundle, double eps,
                                      int order) {
  if (order > bundle.order) {
    throw InputError("evaluate_expansion_modes: order exceeds the bundle");
  }
  const SlabGeometry& geom = bundle.geometry;
  const ChannelGrids& grids = bundle.grids;
  const double root_eps = std::sqrt(eps);

  SolutionPair sol;
  sol.modes.reserve(bundle.n_modes + 1);
  for (int k = 0; k <= bundle.n_modes; ++k) {
    ModeField f = make_zero_mode_field(grids, k);
    double weight = 1.0;
    for (int j = 0; j <= order; ++j, weight *= root_eps) {
      const ModeField& m = bundle.outer[j].modes[k];
      for (Subdomain s : kSubdomains) {
        f.ux_of(s) += weight * m.ux_of(s);
        f.uy_of(s) += weight * m.uy_of(s);
        f.p_of(s) += weight * m.p_of(s);
      }
    }
    const Grid1D& pgrid = grids.porous;
    for (Interface comp : kInterfaces) {
      const auto& lay = bundle.component(comp);
      const double sgn = geom.normal_sign(comp);
      for (int i = 0; i < pgrid.size(); ++i) {
        const double y = pgrid.nodes()(i);
        const double d = geom.chart_distance(comp, y);
        const double z = d / root_eps;
        weight = 1.0;
        for (int j = 0; j <= order; ++j, weight *= root_eps) {
          f.ux_of(Subdomain::Porous)(i) +=
              weight * lay.tangential[j].eval_mode(bundle.cutoff, k, d, z);
          f.uy_of(Subdomain::Porous)(i) +=
              weight * sgn * lay.normal[j].eval_mode(bundle.cutoff, k, d, z);
          f.p_of(Subdomain::Porous)(i) +=
              weight * lay.pressure[j].eval_mode(bundle.cutoff, k, d, z);
        }
      }
    }
    sol.modes.push_back(std::move(f));
  }
  return sol;
}

void check_degree_bounds(const ExpansionBundle& bundle) {
  for (int j = 0; j <= bundle.order; ++j) {
    check_order_degrees(bundle, j);
  }
  for (Interface comp : kInterfaces) {
    const auto& lay = bundle.component(comp);
    if (lay.normal[0].degree() >= 0 || lay.pressure[0].degree() >= 0 ||
        (bundle.order >= 1 && lay.pressure[1].degree() >= 0)) {
      throw InternalError("wkb: structural zeros violated");
    }
  }
}

namespace {

Json coefficient_to_json(const CoefficientField& c) {
  Json orders = Json::array();
  for (int m = 0; m <= c.max_chi_order(); ++m) {
    if (c.order(m).size() == 0) continue;
    Json modes = Json::array();
    for (int k = 0; k < c.order(m).size(); ++k) {
      modes.push_back({c.order(m)(k).real(), c.order(m)(k).imag()});
    }
    orders.push_back({{"chi_order", m}, {"modes", modes}});
  }
  return orders;
}

Json profile_to_json(const BLProfile& p) {
  Json coeff = Json::array();
  for (int l = 0; l <= p.degree(); ++l) {
    coeff.push_back({{"z_power", l}, {"field", coefficient_to_json(p.coeff[l])}});
  }
  return {{"degree", p.degree()}, {"coefficients", coeff}};
}

}  // namespace

std::string bundle_to_json(const ExpansionBundle& bundle, int indent) {
  Json root;
  root["order"] = bundle.order;
  root["n_modes"] = bundle.n_modes;
  root["kappa"] = bundle.params.kappa;
  root["cutoff"] = {{"inner", bundle.cutoff.inner()},
                    {"outer", bundle.cutoff.outer()},
                    {"contact_order", bundle.cutoff.contact_order()}};
  root["gauge_shifts"] = bundle.gauge_shifts;
  root["trace_residuals"] = bundle.trace_residuals;
  root["divergence_residuals"] = bundle.divergence_residuals;

  Json comps = Json::array();
  for (Interface comp : kInterfaces) {
    const auto& lay = bundle.component(comp);
    Json orders = Json::array();
    for (int j = 0; j <= bundle.order; ++j) {
      orders.push_back({{"j", j},
                        {"tangential", profile_to_json(lay.tangential[j])},
                        {"normal", profile_to_json(lay.normal[j])},
                        {"pressure", profile_to_json(lay.pressure[j])}});
    }
    comps.push_back({{"component", comp == Interface::Top ? "top" : "bottom"},
                     {"orders", orders}});
  }
  root["components"] = comps;

  Json degrees = Json::array();
  for (int j = 0; j <= bundle.order; ++j) {
    const auto& lay = bundle.component(Interface::Top);
    degrees.push_back({{"j", j},
                       {"tangential", lay.tangential[j].degree()},
                       {"normal", lay.normal[j].degree()},
                       {"pressure", lay.pressure[j].degree()}});
  }
  root["degree_table"] = degrees;

  Json outer = Json::array();
  for (int j = 0; j <= bundle.order; ++j) {
    const SolutionPair& s = bundle.outer[j];
    std::vector<Eigen::VectorXcd> porous_ux;
    for (const auto& m : s.modes) porous_ux.push_back(m.ux_of(Subdomain::Porous));
    outer.push_back(
        {{"j", j},
         {"pressure_shift", s.pressure_shift},
         {"porous_velocity_l2",
          std::sqrt(parseval_norm_sq(bundle.geometry, bundle.grids.porous,
                                     porous_ux))}});
  }
  root["outer"] = outer;

  return root.dump(indent);
}

}  // namespace bwkb
