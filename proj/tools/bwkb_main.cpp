// bwkb: batch front-end for the channel transmission solvers, the layer
// expansion, and the verification studies.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "bwkb/config.hpp"
#include "bwkb/errors.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/mixed_stokes.hpp"
#include "bwkb/transmission.hpp"
#include "bwkb/verification.hpp"
#include "bwkb/wkb.hpp"

namespace {

using Json = nlohmann::json;
using namespace bwkb;

constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out.good()) {
    throw ConfigError("cannot open output file: " + path);
  }
  out << text;
}

Json norms_to_json(const NormSet& n) {
  return {{"v_fluid_top_l2", n.velocity_l2[0]},
          {"v_porous_l2", n.velocity_l2[1]},
          {"v_fluid_bottom_l2", n.velocity_l2[2]},
          {"v_fluid_h1", n.fluid_h1()},
          {"p_fluid_top_l2", n.pressure_l2[0]},
          {"p_porous_l2", n.pressure_l2[1]},
          {"p_fluid_bottom_l2", n.pressure_l2[2]},
          {"jump_l2", n.jump_l2},
          {"jump_normal_l2", n.jump_normal_l2},
          {"avg_normal_l2", n.avg_normal_l2}};
}

Json modes_to_json(const SolutionPair& sol) {
  Json subs = Json::object();
  const char* names[3] = {"fluid_top", "porous", "fluid_bottom"};
  for (Subdomain s : kSubdomains) {
    Json modes = Json::array();
    for (const ModeField& m : sol.modes) {
      auto pack = [](const Eigen::VectorXcd& v) {
        Json arr = Json::array();
        for (int i = 0; i < v.size(); ++i) {
          arr.push_back({v(i).real(), v(i).imag()});
        }
        return arr;
      };
      modes.push_back({{"k", m.k},
                       {"ux", pack(m.ux_of(s))},
                       {"uy", pack(m.uy_of(s))},
                       {"p", pack(m.p_of(s))}});
    }
    subs[names[static_cast<int>(s)]] = modes;
  }
  return subs;
}

int cmd_solve(const RunConfig& cfg, const std::string& out_path) {
  const SlabGeometry geom = cfg.geometry();
  const ChannelGrids grids = cfg.grids(cfg.eps);
  const ProblemData data = cfg.problem_data(geom, grids, cfg.eps);
  const SolutionPair sol = solve_full({geom, cfg.params(cfg.eps), data}, grids);
  const NormSet norms = compute_norms(sol, geom, grids);

  Json root;
  root["eps"] = cfg.eps;
  root["geometry"] = {{"L", cfg.length},
                      {"a", cfg.fluid_top},
                      {"b", cfg.porous},
                      {"c", cfg.fluid_bottom}};
  root["params"] = {{"kappa", cfg.kappa},
                    {"mu", cfg.mu},
                    {"alpha", cfg.alpha},
                    {"beta", cfg.beta}};
  root["norms"] = norms_to_json(norms);
  root["pressure_shift"] = sol.pressure_shift;
  root["resolution_warning"] = sol.resolution_warning;
  root["max_condition"] = sol.max_condition;
  root["max_residual"] = sol.max_residual;
  root["modes"] = modes_to_json(sol);
  write_output(root.dump(2), out_path);
  return 0;
}

int cmd_expand(const RunConfig& cfg, const std::string& out_path) {
  const SlabGeometry geom = cfg.geometry();
  const ChannelGrids grids =
      cfg.grids(cfg.eps_list.empty() ? cfg.eps : cfg.eps_list.back());
  const ProblemData data = cfg.problem_data(geom, grids, cfg.eps);
  const ExpansionBundle bundle =
      build_expansion(data, geom, cfg.params(cfg.eps), grids, cfg.order);
  check_degree_bounds(bundle);
  write_output(bundle_to_json(bundle, 2), out_path);
  return 0;
}

int cmd_converge(const RunConfig& cfg, const std::string& out_path,
                 const std::string& format) {
  if (cfg.eps_list.size() < 4) {
    throw ConfigError("converge: eps_list needs at least 4 entries");
  }
  if (cfg.order < 2) {
    throw ConfigError("converge: study order k must be >= 2");
  }
  const SlabGeometry geom = cfg.geometry();
  const ChannelGrids grids = cfg.grids(cfg.eps_list.back());
  const ProblemData data = cfg.problem_data(geom, grids, cfg.eps);
  const RemainderReport report = remainder_study(
      data, geom, cfg.params(cfg.eps), cfg.order, cfg.eps_list, grids);
  write_output(format == "csv" ? remainder_report_csv(report)
                               : remainder_report_json(report),
               out_path);
  std::cout << "converge: k=" << report.order_k
            << " fitted_slope=" << report.fitted_slope
            << " theory_slope=" << report.theory_slope
            << " usable_points=" << report.usable_points << '\n';
  return 0;
}

int cmd_energy(const RunConfig& cfg, const std::string& out_path,
               const std::string& format) {
  const SlabGeometry geom = cfg.geometry();
  const ChannelGrids grids = cfg.grids(cfg.eps_list.back());
  const ProblemData data = cfg.problem_data(geom, grids, cfg.eps);
  const auto reports =
      energy_check(data, geom, cfg.params(cfg.eps), cfg.eps_list, grids);
  write_output(format == "csv" ? energy_report_csv(reports)
                               : energy_report_json(reports),
               out_path);
  double max_ratio = 0.0;
  for (const auto& r : reports) {
    if (r.applicable) max_ratio = std::max(max_ratio, r.ratio);
  }
  std::cout << "energy: max_ratio=" << max_ratio << '\n';
  return 0;
}

int cmd_mms(const RunConfig& cfg, const std::string& out_path) {
  const SlabGeometry geom = cfg.geometry();
  const ChannelGrids grids = cfg.grids(cfg.eps);
  const PhysicalParams params = cfg.params(cfg.eps);
  const ManufacturedChannelFlow flow(geom, std::min(cfg.data_modes, cfg.n_modes),
                                     cfg.seed);
  const SolutionPair exact = flow.exact_solution(grids);

  auto max_err = [&](const SolutionPair& a, const SolutionPair& b,
                     bool fluid_only) {
    double err = 0.0;
    for (std::size_t k = 0; k < a.modes.size(); ++k) {
      for (Subdomain s : kSubdomains) {
        if (fluid_only && s == Subdomain::Porous) continue;
        err = std::max(err, (a.modes[k].ux_of(s) - b.modes[k].ux_of(s))
                                .cwiseAbs()
                                .maxCoeff());
        err = std::max(err, (a.modes[k].uy_of(s) - b.modes[k].uy_of(s))
                                .cwiseAbs()
                                .maxCoeff());
        err = std::max(err, (a.modes[k].p_of(s) - b.modes[k].p_of(s))
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
    return err;
  };

  SolutionPair exact_gauged = exact;
  normalize_pressure_gauge(exact_gauged, geom, grids);

  const SolutionPair full =
      solve_full({geom, params, flow.full_data(params, grids)}, grids);
  const double err_full = max_err(full, exact_gauged, false);

  const SolutionPair elem = solve_elementary(
      {geom, params, flow.elementary_data(params, grids)}, grids);
  const double err_elem = max_err(elem, exact_gauged, false);

  const SolutionPair mixed =
      solve_mixed_stokes(flow.mixed_data(params, grids), geom, params, grids);
  const double err_mixed = max_err(mixed, exact, true);

  const double tol = 1e-8;
  Json root = {{"eps", cfg.eps},
               {"tolerance", tol},
               {"full_problem_max_error", err_full},
               {"elementary_max_error", err_elem},
               {"mixed_stokes_max_error", err_mixed}};
  write_output(root.dump(2), out_path);
  std::printf("mms: full=%.3e elementary=%.3e mixed=%.3e (tol %.0e)\n", err_full,
              err_elem, err_mixed, tol);
  const bool ok = err_full <= tol && err_elem <= tol && err_mixed <= tol;
  if (!ok) {
    std::cerr << "mms: recovery error above tolerance\n";
  }
  return ok ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes-Brinkman channel solver with layer-expansion studies"};
  app.require_subcommand(1);
  app.footer(
      "Configuration file (INI sections, all keys optional):\n"
      "  [geometry]        L=6.283185  a=1.0  b=1.0  c=1.0\n"
      "  [params]          kappa=1.0  mu=1.0  alpha=1.0  beta=1.0\n"
      "  [data]            kind=analytic  seed=7  modes=3  file=\n"
      "                    (kind: manufactured | analytic | zero | file)\n"
      "  [discretization]  n_modes=8  n_points=48  layer_factor=6.5\n"
      "  [study]           eps=0.1  order=2  eps_list=1e-1,3e-2,1e-2,3e-3,1e-3\n"
      "Environment: BWKB_THREADS caps the worker count of the studies.");

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  double eps_flag = -1.0;
  std::vector<double> eps_list_flag;
  int order_flag = -1;

  app.add_option("--config", config_path, "configuration file (INI sections)");
  app.add_option("--eps", eps_flag, "single epsilon (overrides study.eps)");
  app.add_option("--eps-list", eps_list_flag,
                 "descending epsilon list (overrides study.eps_list)")
      ->delimiter(',');
  app.add_option("--order", order_flag,
                 "expansion / study order (overrides study.order)");
  app.add_option("--out", out_path, "output artifact path (default: stdout)");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* solve = app.add_subcommand("solve", "solve the full problem");
  CLI::App* expand = app.add_subcommand("expand", "build the layer expansion");
  CLI::App* converge =
      app.add_subcommand("converge", "remainder convergence study");
  CLI::App* energy = app.add_subcommand("energy", "uniform energy study");
  CLI::App* mms =
      app.add_subcommand("mms", "manufactured-solution recovery check");
  for (CLI::App* sub : {solve, expand, converge, energy, mms}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) {
      cfg = parse_config_file(config_path);
    }
    if (eps_flag > 0.0) cfg.eps = eps_flag;
    if (!eps_list_flag.empty()) cfg.eps_list = eps_list_flag;
    if (order_flag >= 0) cfg.order = order_flag;
    cfg.validate();

    if (solve->parsed()) return cmd_solve(cfg, out_path);
    if (expand->parsed()) return cmd_expand(cfg, out_path);
    if (converge->parsed()) return cmd_converge(cfg, out_path, format);
    if (energy->parsed()) return cmd_energy(cfg, out_path, format);
    if (mms->parsed()) return cmd_mms(cfg, out_path);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "numerical error: " << e.what();
    if (e.mode >= 0) std::cerr << " (mode " << e.mode << ")";
    std::cerr << '\n';
    return kExitNumerical;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
