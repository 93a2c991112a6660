#include "bwkb/verification.hpp"

#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bwkb/errors.hpp"
#include "bwkb/parallel.hpp"
#include "bwkb/transmission.hpp"

namespace bwkb {

namespace {

using Json = nlohmann::json;

double real_pairing(Complex a, Complex b, int k) {
  // Parseval pairing of one conjugate-symmetric mode pair
  return mode_weight(k) * (a * std::conj(b)).real();
}

void require_descending(const std::vector<double>& eps_list) {
  if (eps_list.empty()) throw InputError("epsilon list must not be empty");
  for (std::size_t i = 1; i < eps_list.size(); ++i) {
    if (!(eps_list[i] < eps_list[i - 1])) {
      throw InputError("epsilon list must be strictly descending");
    }
  }
  for (double e : eps_list) {
    if (!(e > 0.0)) throw InputError("epsilon values must be positive");
  }
}

}  // namespace

double NormSet::fluid_l2() const {
  return std::sqrt(velocity_l2[0] * velocity_l2[0] +
                   velocity_l2[2] * velocity_l2[2]);
}
double NormSet::fluid_h1() const {
  return std::sqrt(velocity_h1[0] * velocity_h1[0] +
                   velocity_h1[2] * velocity_h1[2]);
}
double NormSet::fluid_sym_grad_l2() const {
  return std::sqrt(sym_grad_l2[0] * sym_grad_l2[0] +
                   sym_grad_l2[2] * sym_grad_l2[2]);
}

NormSet compute_norms(const SolutionPair& sol, const SlabGeometry& geom,
                      const ChannelGrids& grids) {
  NormSet out;
  const double period = geom.period();

  for (Subdomain s : kSubdomains) {
    const Grid1D& grid = grids.grid(s);
    double l2 = 0.0, grad = 0.0, sym = 0.0, pl2 = 0.0;
    for (const ModeField& f : sol.modes) {
      const double xi = wavenumber(geom, f.k);
      const double w = mode_weight(f.k);
      const Eigen::VectorXcd& ux = f.ux_of(s);
      const Eigen::VectorXcd& uy = f.uy_of(s);
      const Eigen::VectorXcd dux = grid.diffc() * ux;
      const Eigen::VectorXcd duy = grid.diffc() * uy;

      l2 += w * grid.integrate((ux.cwiseAbs2() + uy.cwiseAbs2()).eval());
      grad += w * grid.integrate((dux.cwiseAbs2() + duy.cwiseAbs2() +
                                  xi * xi * (ux.cwiseAbs2() + uy.cwiseAbs2()))
                                     .eval());
      const Eigen::VectorXcd dxy = 0.5 * (dux + kImag * xi * uy);
      sym += w * grid.integrate((xi * xi * ux.cwiseAbs2() + duy.cwiseAbs2() +
                                 2.0 * dxy.cwiseAbs2())
                                    .eval());
      pl2 += w * grid.integrate(f.p_of(s).cwiseAbs2().eval());
    }
    const int i = static_cast<int>(s);
    out.velocity_l2[i] = std::sqrt(period * l2);
    out.velocity_grad_l2[i] = std::sqrt(period * grad);
    out.velocity_h1[i] = std::sqrt(period * (l2 + grad));
    out.sym_grad_l2[i] = std::sqrt(period * sym);
    out.pressure_l2[i] = std::sqrt(period * pl2);
  }

  double jump = 0.0, jump_t = 0.0, jump_n = 0.0, avg_n = 0.0;
  for (Interface comp : kInterfaces) {
    const double sgn = geom.normal_sign(comp);
    const Subdomain fs = fluid_subdomain(comp);
    const int fi = fluid_interface_node(grids, comp);
    const int pi = porous_interface_node(grids, comp);
    for (const ModeField& f : sol.modes) {
      const double w = mode_weight(f.k);
      const Complex jx = f.ux_of(fs)(fi) - f.ux_of(Subdomain::Porous)(pi);
      const Complex jy = f.uy_of(fs)(fi) - f.uy_of(Subdomain::Porous)(pi);
      const Complex an =
          0.5 * sgn * (f.uy_of(fs)(fi) + f.uy_of(Subdomain::Porous)(pi));
      jump += w * (std::norm(jx) + std::norm(jy));
      jump_t += w * std::norm(jx);
      jump_n += w * std::norm(jy);  // |s jy| = |jy|
      avg_n += w * std::norm(an);
    }
  }
  out.jump_l2 = std::sqrt(period * jump);
  out.jump_tangential_l2 = std::sqrt(period * jump_t);
  out.jump_normal_l2 = std::sqrt(period * jump_n);
  out.avg_normal_l2 = std::sqrt(period * avg_n);
  return out;
}

EnergyIdentity energy_identity(const SolutionPair& sol, const ProblemData& data,
                               const SlabGeometry& geom,
                               const PhysicalParams& params,
                               const ChannelGrids& grids) {
  const NormSet norms = compute_norms(sol, geom, grids);
  const double period = geom.period();

  EnergyIdentity id;
  const double sym_minus = norms.sym_grad_l2[static_cast<int>(Subdomain::Porous)];
  const double v_minus = norms.velocity_l2[static_cast<int>(Subdomain::Porous)];
  id.bilinear = 2.0 * params.eps * sym_minus * sym_minus +
                params.kappa * v_minus * v_minus +
                2.0 * params.mu * norms.fluid_sym_grad_l2() *
                    norms.fluid_sym_grad_l2() +
                params.beta * norms.avg_normal_l2 * norms.avg_normal_l2 +
                params.alpha * norms.jump_tangential_l2 * norms.jump_tangential_l2 +
                norms.jump_normal_l2 * norms.jump_normal_l2 / params.eps;

  double load = 0.0;
  for (Subdomain s : kSubdomains) {
    const Grid1D& grid = grids.grid(s);
    for (const ModeField& f : sol.modes) {
      const int k = f.k;
      const Eigen::VectorXcd integrand =
          data.gx_of(s, k).conjugate().cwiseProduct(f.ux_of(s)) +
          data.gy_of(s, k).conjugate().cwiseProduct(f.uy_of(s));
      // conjugate placement is immaterial for the real part
      Complex total = grid.integrate(integrand);
      load += period * mode_weight(k) * total.real();
    }
  }
  for (Interface comp : kInterfaces) {
    const double sgn = geom.normal_sign(comp);
    const Subdomain fs = fluid_subdomain(comp);
    const int fi = fluid_interface_node(grids, comp);
    const int pi = porous_interface_node(grids, comp);
    for (const ModeField& f : sol.modes) {
      const int k = f.k;
      const Complex jx = f.ux_of(fs)(fi) - f.ux_of(Subdomain::Porous)(pi);
      const Complex jy = f.uy_of(fs)(fi) - f.uy_of(Subdomain::Porous)(pi);
      const Complex ax = 0.5 * (f.ux_of(fs)(fi) + f.ux_of(Subdomain::Porous)(pi));
      const Complex ay = 0.5 * (f.uy_of(fs)(fi) + f.uy_of(Subdomain::Porous)(pi));
      const Vec2c h = data.h_of(comp, k);
      const Vec2c l = data.l_of(comp, k);
      (void)sgn;
      // Pairing signs follow from integrating the strong system by parts:
      // the jump of the stress carries +l and its average +h, which lands
      // them on the load side with a minus.
      load -= period * (real_pairing(h.x, jx, k) + real_pairing(h.y, jy, k));
      load -= period * (real_pairing(l.x, ax, k) + real_pairing(l.y, ay, k));
    }
  }
  id.load = load;
  return id;
}

std::vector<EnergyReport> energy_check(const ProblemData& data,
                                       const SlabGeometry& geom,
                                       PhysicalParams params,
                                       const std::vector<double>& eps_list,
                                       const ChannelGrids& grids) {
  require_descending(eps_list);
  const int n = static_cast<int>(eps_list.size());
  std::vector<EnergyReport> reports(n);

  double data_sq = 0.0;
  for (Subdomain s : kSubdomains) {
    const Grid1D& grid = grids.grid(s);
    for (int k = 0; k <= data.n_modes; ++k) {
      data_sq += mode_weight(k) *
                 grid.integrate((data.gx_of(s, k).cwiseAbs2() +
                                 data.gy_of(s, k).cwiseAbs2())
                                    .eval());
    }
  }
  data_sq *= geom.period();
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= data.n_modes; ++k) {
      data_sq += geom.period() * mode_weight(k) *
                 (std::norm(data.h[c][k].x) + std::norm(data.h[c][k].y) +
                  std::norm(data.l[c][k].x) + std::norm(data.l[c][k].y));
    }
  }

  parallel_for(n, [&](int i) {
    PhysicalParams p = params;
    p.eps = eps_list[i];
    const SolutionPair sol = solve_full({geom, p, data}, grids);
    const NormSet norms = compute_norms(sol, geom, grids);

    EnergyReport r;
    r.eps = p.eps;
    const double sym_minus = norms.sym_grad_l2[1];
    r.eps_strain_sq = p.eps * sym_minus * sym_minus;
    r.quarter_kappa_vminus_sq =
        0.25 * p.kappa * norms.velocity_l2[1] * norms.velocity_l2[1];
    r.third_mu_vplus_h1_sq = p.mu / 3.0 * norms.fluid_h1() * norms.fluid_h1();
    r.jump_normal_over_4eps =
        norms.jump_normal_l2 * norms.jump_normal_l2 / (4.0 * p.eps);
    r.quarter_alpha_jump_sq = 0.25 * p.alpha * norms.jump_l2 * norms.jump_l2;
    r.quarter_beta_avg_sq =
        0.25 * p.beta * norms.avg_normal_l2 * norms.avg_normal_l2;
    r.lhs_total = r.eps_strain_sq + r.quarter_kappa_vminus_sq +
                  r.third_mu_vplus_h1_sq + r.jump_normal_over_4eps +
                  r.quarter_alpha_jump_sq + r.quarter_beta_avg_sq;
    r.data_norm_sq = data_sq;
    r.applicable = data_sq > 0.0;
    r.ratio = r.applicable ? r.lhs_total / data_sq
                           : std::numeric_limits<double>::quiet_NaN();
    r.resolution_warning = sol.resolution_warning;
    reports[i] = r;
  });
  return reports;
}

namespace {

RemainderRow measure_remainder(const ProblemData& data, const SlabGeometry& geom,
                               PhysicalParams params, double eps, int order_k,
                               const ExpansionBundle& bundle,
                               const ChannelGrids& grids) {
  params.eps = eps;
  const SolutionPair full = solve_full({geom, params, data}, grids);
  const SolutionPair expansion = evaluate_expansion_modes(bundle, eps, order_k);
  const SolutionPair order0 = evaluate_expansion_modes(bundle, eps, 0);

  SolutionPair r;
  SolutionPair r0;
  r.modes.reserve(full.modes.size());
  r0.modes.reserve(full.modes.size());
  for (std::size_t k = 0; k < full.modes.size(); ++k) {
    ModeField d = full.modes[k];
    ModeField d0 = full.modes[k];
    for (Subdomain s : kSubdomains) {
      d.ux_of(s) -= expansion.modes[k].ux_of(s);
      d.uy_of(s) -= expansion.modes[k].uy_of(s);
      d.p_of(s) -= expansion.modes[k].p_of(s);
      d0.ux_of(s) -= order0.modes[k].ux_of(s);
      d0.uy_of(s) -= order0.modes[k].uy_of(s);
    }
    r.modes.push_back(std::move(d));
    r0.modes.push_back(std::move(d0));
  }

  const NormSet norms = compute_norms(r, geom, grids);
  const NormSet norms0 = compute_norms(r0, geom, grids);

  RemainderRow row;
  row.eps = eps;
  row.r_minus_l2 = norms.velocity_l2[1];
  row.grad_r_minus_l2 = norms.velocity_grad_l2[1];
  row.r_plus_h1 = norms.fluid_h1();
  row.combined_lhs = eps * row.grad_r_minus_l2 * row.grad_r_minus_l2 +
                     0.25 * params.kappa * row.r_minus_l2 * row.r_minus_l2 +
                     params.mu / 3.0 * row.r_plus_h1 * row.r_plus_h1;
  row.r0_minus_l2 = norms0.velocity_l2[1];
  row.flagged = full.resolution_warning;
  return row;
}

}  // namespace

RemainderReport remainder_study(const ProblemData& data, const SlabGeometry& geom,
                                PhysicalParams params, int order_k,
                                const std::vector<double>& eps_list,
                                const ChannelGrids& grids,
                                const ExpansionBundle* prebuilt) {
  if (order_k < 2) throw InputError("remainder_study: order k must be >= 2");
  require_descending(eps_list);

  ExpansionBundle local;
  const ExpansionBundle* bundle = prebuilt;
  if (!bundle) {
    local = build_expansion(data, geom, params, grids, order_k);
    bundle = &local;
  }
  if (bundle->order < order_k) {
    throw InputError("remainder_study: bundle order below requested k");
  }

  RemainderReport report;
  report.order_k = order_k;
  report.theory_slope = 0.5 * (order_k - 2);
  report.rows.resize(eps_list.size());

  parallel_for(static_cast<int>(eps_list.size()), [&](int i) {
    report.rows[i] = measure_remainder(data, geom, params, eps_list[i], order_k,
                                       *bundle, grids);
  });

  std::vector<double> xs, ys;
  for (const RemainderRow& row : report.rows) {
    if (row.flagged) continue;
    xs.push_back(row.eps);
    ys.push_back(row.combined_lhs);
  }
  report.usable_points = static_cast<int>(xs.size());
  if (report.usable_points < 4) {
    throw SolverError("remainder_study: fewer than 4 usable points for the fit");
  }
  report.fitted_slope = fit_loglog_slope(xs, ys);
  return report;
}

DivergenceDefect divergence_defect(const ExpansionBundle& bundle, int order_k,
                                   double eps) {
  if (order_k > bundle.order) {
    throw InputError("divergence_defect: order exceeds the bundle");
  }
  const SlabGeometry& geom = bundle.geometry;
  const Grid1D& grid = bundle.grids.porous;
  const double root_eps = std::sqrt(eps);
  const double period = geom.period();

  // Per-order layer divergences and normal-derivative profiles.
  struct LayerDiv {
    BLProfile div;
    BLProfile dz_nu;
  };
  std::array<std::vector<LayerDiv>, 2> parts;
  for (Interface comp : kInterfaces) {
    auto& lay = bundle.component(comp);
    auto& store = parts[static_cast<int>(comp)];
    store.reserve(order_k + 1);
    for (int j = 0; j <= order_k; ++j) {
      LayerDiv ld{zero_profile(bundle.params.sqrt_kappa(), comp,
                               ProfileKind::Pressure),
                  bl::dz(lay.normal[j])};
      // slow divergence of the layer: d_tau w - (grad d . grad) nu - dd nu
      BLProfile div_t;
      {
        div_t = lay.tangential[j];
        for (auto& c : div_t.coeff) c = tangential_derivative(c, geom);
        BLProfile nrm = lay.normal[j];
        for (auto& c : nrm.coeff) {
          CoefficientField d = normal_derivative(c);
          if (bundle.hooks.delta_d != 0.0) {
            d += Complex(bundle.hooks.delta_d, 0.0) * c;
          }
          c = Complex(-1.0, 0.0) * d;
        }
        // combine
        if (nrm.coeff.size() > div_t.coeff.size()) std::swap(div_t, nrm);
        for (std::size_t l = 0; l < nrm.coeff.size(); ++l) {
          if (div_t.coeff[l].n_modes() < 0) {
            div_t.coeff[l] = nrm.coeff[l];
          } else if (nrm.coeff[l].n_modes() >= 0) {
            div_t.coeff[l] += nrm.coeff[l];
          }
        }
      }
      ld.div = div_t;
      store.push_back(std::move(ld));
    }
  }

  double truncated_sq = 0.0, closed_sq = 0.0;
  const double wk = std::pow(root_eps, order_k);
  for (int k = 0; k <= bundle.n_modes; ++k) {
    const double xi = wavenumber(geom, k);
    Eigen::VectorXcd truncated = Eigen::VectorXcd::Zero(grid.size());
    Eigen::VectorXcd closed = Eigen::VectorXcd::Zero(grid.size());

    double weight = 1.0;
    for (int j = 0; j <= order_k; ++j, weight *= root_eps) {
      const ModeField& m = bundle.outer[j].modes[k];
      truncated += weight * (kImag * xi * m.ux_of(Subdomain::Porous) +
                             grid.diffc() * m.uy_of(Subdomain::Porous));
    }
    for (Interface comp : kInterfaces) {
      const auto& store = parts[static_cast<int>(comp)];
      for (int i = 0; i < grid.size(); ++i) {
        const double d = geom.chart_distance(comp, grid.nodes()(i));
        const double z = d / root_eps;
        weight = 1.0;
        for (int j = 0; j <= order_k; ++j, weight *= root_eps) {
          // chain rule: slow divergence + (grad d . dz) / sqrt(eps)
          truncated(i) +=
              weight * (store[j].div.eval_mode(bundle.cutoff, k, d, z) -
                        store[j].dz_nu.eval_mode(bundle.cutoff, k, d, z) / root_eps);
        }
        closed(i) += wk * store[order_k].div.eval_mode(bundle.cutoff, k, d, z);
      }
    }
    truncated_sq += mode_weight(k) * grid.integrate(truncated.cwiseAbs2().eval());
    closed_sq += mode_weight(k) * grid.integrate(closed.cwiseAbs2().eval());
  }

  DivergenceDefect out;
  out.truncated_norm = std::sqrt(period * truncated_sq);
  out.closed_form_norm = std::sqrt(period * closed_sq);
  const double scale = std::max(out.truncated_norm, out.closed_form_norm);
  out.relative_gap =
      scale > 0.0 ? std::abs(out.truncated_norm - out.closed_form_norm) / scale
                  : 0.0;
  return out;
}

double closed_form_defect_norm(const ExpansionBundle& bundle, int order_k,
                               double eps, int n_quad) {
  if (order_k > bundle.order) {
    throw InputError("closed_form_defect_norm: order exceeds the bundle");
  }
  const SlabGeometry& geom = bundle.geometry;
  const Grid1D grid = build_grid({geom.interface_bottom_y(), 0.0}, n_quad);
  const double root_eps = std::sqrt(eps);
  const double wk = std::pow(root_eps, order_k);

  // slow divergence of the order-k layer per component
  std::array<BLProfile, 2> divs;
  for (Interface comp : kInterfaces) {
    const auto& lay = bundle.component(comp);
    BLProfile div = lay.tangential[order_k];
    for (auto& c : div.coeff) c = tangential_derivative(c, geom);
    BLProfile nrm = lay.normal[order_k];
    for (auto& c : nrm.coeff) {
      CoefficientField d = normal_derivative(c);
      if (bundle.hooks.delta_d != 0.0) {
        d += Complex(bundle.hooks.delta_d, 0.0) * c;
      }
      c = Complex(-1.0, 0.0) * d;
    }
    if (nrm.coeff.size() > div.coeff.size()) std::swap(div, nrm);
    for (std::size_t l = 0; l < nrm.coeff.size(); ++l) {
      if (div.coeff[l].n_modes() < 0) {
        div.coeff[l] = nrm.coeff[l];
      } else if (nrm.coeff[l].n_modes() >= 0) {
        div.coeff[l] += nrm.coeff[l];
      }
    }
    divs[static_cast<int>(comp)] = div;
  }

  double total = 0.0;
  for (int k = 0; k <= bundle.n_modes; ++k) {
    Eigen::VectorXcd values = Eigen::VectorXcd::Zero(grid.size());
    for (Interface comp : kInterfaces) {
      for (int i = 0; i < grid.size(); ++i) {
        const double d = geom.chart_distance(comp, grid.nodes()(i));
        values(i) += wk * divs[static_cast<int>(comp)].eval_mode(bundle.cutoff, k,
                                                                 d, d / root_eps);
      }
    }
    total += mode_weight(k) * grid.integrate(values.cwiseAbs2().eval());
  }
  return std::sqrt(geom.period() * total);
}

double fit_loglog_slope(const std::vector<double>& eps,
                        const std::vector<double>& values) {
  if (eps.size() != values.size() || eps.size() < 2) {
    throw InputError("fit_loglog_slope: need matching lists of >= 2 points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(eps.size());
  for (int i = 0; i < n; ++i) {
    const double x = std::log(eps[i]);
    const double y = std::log(std::max(values[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string energy_report_csv(const std::vector<EnergyReport>& reports) {
  std::ostringstream os;
  os.precision(16);
  os << "eps,eps_strain_sq,quarter_kappa_vminus_sq,third_mu_vplus_h1_sq,"
        "jump_normal_over_4eps,quarter_alpha_jump_sq,quarter_beta_avg_sq,"
        "data_norm_sq,lhs_total,ratio,resolution_warning\n";
  for (const EnergyReport& r : reports) {
    os << r.eps << ',' << r.eps_strain_sq << ',' << r.quarter_kappa_vminus_sq
       << ',' << r.third_mu_vplus_h1_sq << ',' << r.jump_normal_over_4eps << ','
       << r.quarter_alpha_jump_sq << ',' << r.quarter_beta_avg_sq << ','
       << r.data_norm_sq << ',' << r.lhs_total << ',' << r.ratio << ','
       << (r.resolution_warning ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string remainder_report_csv(const RemainderReport& report) {
  std::ostringstream os;
  os.precision(16);
  os << "eps,k,r_minus_l2,grad_r_minus_l2,r_plus_h1,combined_lhs,r0_minus_l2,"
        "flagged,fitted_slope,theory_slope\n";
  for (const RemainderRow& r : report.rows) {
    os << r.eps << ',' << report.order_k << ',' << r.r_minus_l2 << ','
       << r.grad_r_minus_l2 << ',' << r.r_plus_h1 << ',' << r.combined_lhs << ','
       << r.r0_minus_l2 << ',' << (r.flagged ? 1 : 0) << ','
       << report.fitted_slope << ',' << report.theory_slope << '\n';
  }
  return os.str();
}

std::string energy_report_json(const std::vector<EnergyReport>& reports,
                               int indent) {
  Json arr = Json::array();
  for (const EnergyReport& r : reports) {
    arr.push_back({{"eps", r.eps},
                   {"eps_strain_sq", r.eps_strain_sq},
                   {"quarter_kappa_vminus_sq", r.quarter_kappa_vminus_sq},
                   {"third_mu_vplus_h1_sq", r.third_mu_vplus_h1_sq},
                   {"jump_normal_over_4eps", r.jump_normal_over_4eps},
                   {"quarter_alpha_jump_sq", r.quarter_alpha_jump_sq},
                   {"quarter_beta_avg_sq", r.quarter_beta_avg_sq},
                   {"data_norm_sq", r.data_norm_sq},
                   {"lhs_total", r.lhs_total},
                   {"ratio", r.applicable ? Json(r.ratio) : Json()},
                   {"resolution_warning", r.resolution_warning}});
  }
  return arr.dump(indent);
}

std::string remainder_report_json(const RemainderReport& report, int indent) {
  Json rows = Json::array();
  for (const RemainderRow& r : report.rows) {
    rows.push_back({{"eps", r.eps},
                    {"r_minus_l2", r.r_minus_l2},
                    {"grad_r_minus_l2", r.grad_r_minus_l2},
                    {"r_plus_h1", r.r_plus_h1},
                    {"combined_lhs", r.combined_lhs},
                    {"r0_minus_l2", r.r0_minus_l2},
                    {"flagged", r.flagged}});
  }
  Json root = {{"k", report.order_k},
               {"theory_slope", report.theory_slope},
               {"fitted_slope", report.fitted_slope},
               {"usable_points", report.usable_points},
               {"rows", rows}};
  return root.dump(indent);
}

}  // namespace bwkb
