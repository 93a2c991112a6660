#pragma once

#include <string>
#include <vector>

#include "bwkb/fourier.hpp"
#include "bwkb/geometry.hpp"
#include "bwkb/manufactured.hpp"
#include "bwkb/params.hpp"

namespace bwkb {

/// One batch-run configuration. The CLI fills it from flags and the config
/// file; the factory methods build the solver inputs.
struct RunConfig {
  // geometry
  double length = 6.283185307179586;
  double fluid_top = 1.0;
  double porous = 1.0;
  double fluid_bottom = 1.0;
  // params
  double kappa = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  // data: manufactured | analytic | zero | file
  std::string data_kind = "analytic";
  unsigned seed = 7;
  int data_modes = 3;
  std::string data_file;
  // discretization
  int n_modes = 8;
  int n_points = 48;
  double layer_factor = 6.5;
  // study
  std::vector<double> eps_list{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  int order = 2;
  double eps = 0.1;

  void validate() const;

  SlabGeometry geometry() const;
  PhysicalParams params(double eps_value) const;
  ChannelGrids grids(double eps_min) const;

  /// Data per the configured kind; `eps_value` only matters for the
  /// manufactured kind (whose interface data carry the epsilon scaling).
  ProblemData problem_data(const SlabGeometry& geom, const ChannelGrids& grids,
                           double eps_value) const;
};

/// Explicit Fourier coefficients from a JSON file (see README for the
/// schema). Throws ConfigError on missing files or malformed content.
ProblemData load_data_file(const std::string& path, const SlabGeometry& geom,
                           const ChannelGrids& grids, int n_modes);

/// Reads an INI-style configuration with [geometry], [params], [data],
/// [discretization] and [study] sections. Unknown keys are rejected; values
/// keep their defaults when absent. Throws ConfigError on missing or
/// malformed files.
RunConfig parse_config_file(const std::string& path);

}  // namespace bwkb
