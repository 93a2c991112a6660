#pragma once

#include <string>
#include <vector>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/mode_field.hpp"
#include "bwkb/params.hpp"
#include "bwkb/wkb.hpp"

namespace bwkb {

/// Subdomain and interface norms of a solution, via Parseval in x and
/// quadrature in y.
struct NormSet {
  std::array<double, 3> velocity_l2{};       // per subdomain
  std::array<double, 3> velocity_grad_l2{};  // gradient seminorm
  std::array<double, 3> velocity_h1{};
  std::array<double, 3> sym_grad_l2{};       // strain-rate seminorm
  std::array<double, 3> pressure_l2{};
  double jump_l2 = 0.0;          // [v] on the interface
  double jump_tangential_l2 = 0.0;
  double jump_normal_l2 = 0.0;   // [v.n]
  double avg_normal_l2 = 0.0;    // {v.n}

  double fluid_l2() const;
  double fluid_h1() const;
  double fluid_sym_grad_l2() const;
};

NormSet compute_norms(const SolutionPair& sol, const SlabGeometry& geom,
                      const ChannelGrids& grids);

/// Both sides of the weak-form identity a_eps(v, v) = b(v) for a solution of
/// the full problem (the natural, un-gauged pressure plays no role here).
struct EnergyIdentity {
  double bilinear = 0.0;
  double load = 0.0;
};
EnergyIdentity energy_identity(const SolutionPair& sol, const ProblemData& data,
                               const SlabGeometry& geom,
                               const PhysicalParams& params,
                               const ChannelGrids& grids);

/// Terms of the uniform energy estimate per epsilon. The H1 coefficient uses
/// C = 1; only epsilon-uniform boundedness of the ratio is asserted anywhere.
struct EnergyReport {
  double eps = 0.0;
  double eps_strain_sq = 0.0;        // eps ||d(v-)||^2
  double quarter_kappa_vminus_sq = 0.0;
  double third_mu_vplus_h1_sq = 0.0;
  double jump_normal_over_4eps = 0.0;
  double quarter_alpha_jump_sq = 0.0;
  double quarter_beta_avg_sq = 0.0;
  double data_norm_sq = 0.0;
  double lhs_total = 0.0;
  double ratio = 0.0;  // lhs / data, NaN when the data vanish
  bool applicable = false;
  bool resolution_warning = false;
};

/// Solves the full problem for every epsilon (descending list) and evaluates
/// the estimate's terms.
std::vector<EnergyReport> energy_check(const ProblemData& data,
                                       const SlabGeometry& geom,
                                       PhysicalParams params,
                                       const std::vector<double>& eps_list,
                                       const ChannelGrids& grids);

/// One remainder evaluation: full solve minus truncated expansion.
struct RemainderRow {
  double eps = 0.0;
  double r_minus_l2 = 0.0;
  double grad_r_minus_l2 = 0.0;
  double r_plus_h1 = 0.0;
  double combined_lhs = 0.0;   // eps |grad r-|^2 + kappa/4 |r-|^2 + mu/3 |r+|_1^2
  double r0_minus_l2 = 0.0;    // order-0 truncation, porous L2 (limit check)
  bool flagged = false;        // unresolved layer, excluded from the fit
};

struct RemainderReport {
  int order_k = 0;
  double theory_slope = 0.0;   // (k-2)/2 for the squared-norm combination
  double fitted_slope = 0.0;
  int usable_points = 0;
  std::vector<RemainderRow> rows;
};

/// Builds the expansion to order k from the data and measures the remainder
/// across the epsilon list (descending). Requires k >= 2 and at least 4
/// usable points for the fit.
RemainderReport remainder_study(const ProblemData& data, const SlabGeometry& geom,
                                PhysicalParams params, int order_k,
                                const std::vector<double>& eps_list,
                                const ChannelGrids& grids,
                                const ExpansionBundle* prebuilt = nullptr);

/// Divergence defect of the truncated expansion: the porous divergence of the
/// truncated velocity against the closed-form single-term evaluation.
struct DivergenceDefect {
  double truncated_norm = 0.0;
  double closed_form_norm = 0.0;
  double relative_gap = 0.0;
};
DivergenceDefect divergence_defect(const ExpansionBundle& bundle, int order_k,
                                   double eps);

/// Closed-form defect norm ||eps^(k/2) div layer_k||_0 on a dedicated
/// quadrature grid of n_quad porous nodes. The layer narrows with epsilon, so
/// scaling studies at small epsilon need finer quadrature than the solver
/// grids carry; for epsilon below roughly (inner cutoff)^2 the norm follows
/// the layer-integral power law eps^(k/2 + 1/4).
double closed_form_defect_norm(const ExpansionBundle& bundle, int order_k,
                               double eps, int n_quad);

/// Least-squares slope of log(values) against log(eps) over unflagged points.
double fit_loglog_slope(const std::vector<double>& eps,
                        const std::vector<double>& values);

std::string energy_report_csv(const std::vector<EnergyReport>& reports);
std::string remainder_report_csv(const RemainderReport& report);
std::string energy_report_json(const std::vector<EnergyReport>& reports,
                               int indent = 2);
std::string remainder_report_json(const RemainderReport& report, int indent = 2);

}  // namespace bwkb
