#include "bwkb/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {
using Json = nlohmann::json;
}

void RunConfig::validate() const {
  geometry();
  params(eps).validate();
  if (n_modes < 0) throw ConfigError("discretization: n_modes must be >= 0");
  if (n_points < 8) throw ConfigError("discretization: n_points must be >= 8");
  if (order < 0 || order > 6) throw ConfigError("study: order must lie in [0, 6]");
  if (!(eps > 0.0)) throw ConfigError("study: eps must be positive");
  if (data_kind != "manufactured" && data_kind != "analytic" &&
      data_kind != "zero" && data_kind != "file") {
    throw ConfigError("data: kind must be manufactured|analytic|zero|file");
  }
  if (data_kind == "file") {
    std::ifstream in(data_file);
    if (!in.good()) {
      throw ConfigError("data: file does not exist: " + data_file);
    }
  }
  for (double e : eps_list) {
    if (!(e > 0.0)) throw ConfigError("study: eps_list entries must be positive");
  }
  for (std::size_t i = 1; i < eps_list.size(); ++i) {
    if (!(eps_list[i] < eps_list[i - 1])) {
      throw ConfigError("study: eps_list must be strictly descending");
    }
  }
}

SlabGeometry RunConfig::geometry() const {
  return make_geometry(length, fluid_top, porous, fluid_bottom);
}

PhysicalParams RunConfig::params(double eps_value) const {
  PhysicalParams p;
  p.kappa = kappa;
  p.mu = mu;
  p.alpha = alpha;
  p.beta = beta;
  p.eps = eps_value;
  p.validate();
  return p;
}

ChannelGrids RunConfig::grids(double eps_min) const {
  return make_channel_grids(geometry(), n_points, eps_min, kappa, layer_factor);
}

ProblemData RunConfig::problem_data(const SlabGeometry& geom,
                                    const ChannelGrids& grids,
                                    double eps_value) const {
  if (data_kind == "zero") {
    return make_zero_data(grids, n_modes);
  }
  if (data_kind == "analytic") {
    ProblemData d = make_study_data(geom, grids, std::min(data_modes, n_modes), seed);
    // promote to the configured mode count (upper modes zero)
    ProblemData out = make_zero_data(grids, n_modes);
    for (int k = 0; k <= d.n_modes; ++k) {
      for (Subdomain s : kSubdomains) {
        out.gx[static_cast<int>(s)][k] = d.gx[static_cast<int>(s)][k];
        out.gy[static_cast<int>(s)][k] = d.gy[static_cast<int>(s)][k];
      }
      for (int c = 0; c < 2; ++c) {
        out.h[c][k] = d.h[c][k];
        out.l[c][k] = d.l[c][k];
      }
    }
    return out;
  }
  if (data_kind == "manufactured") {
    const ManufacturedChannelFlow flow(geom, std::min(data_modes, n_modes), seed);
    ProblemData d = flow.full_data(params(eps_value), grids);
    ProblemData out = make_zero_data(grids, n_modes);
    for (int k = 0; k <= d.n_modes; ++k) {
      for (Subdomain s : kSubdomains) {
        out.gx[static_cast<int>(s)][k] = d.gx[static_cast<int>(s)][k];
        out.gy[static_cast<int>(s)][k] = d.gy[static_cast<int>(s)][k];
      }
      for (int c = 0; c < 2; ++c) {
        out.h[c][k] = d.h[c][k];
        out.l[c][k] = d.l[c][k];
      }
    }
    return out;
  }
  return load_data_file(data_file, geom, grids, n_modes);
}

namespace {

Complex json_complex(const Json& pair) {
  if (!pair.is_array() || pair.size() != 2) {
    throw ConfigError("data file: complex entries must be [re, im] pairs");
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

void read_interface(const Json& node, std::array<std::vector<Vec2c>, 2>& field,
                    int n_modes) {
  const char* names[2] = {"top", "bottom"};
  for (int c = 0; c < 2; ++c) {
    if (!node.contains(names[c])) continue;
    const Json& modes = node[names[c]];
    for (int k = 0; k < static_cast<int>(modes.size()) && k <= n_modes; ++k) {
      const Json& m = modes[k];
      if (!m.is_array() || m.size() != 2) {
        throw ConfigError("data file: interface modes must be [[re,im],[re,im]]");
      }
      field[c][k] = Vec2c{json_complex(m[0]), json_complex(m[1])};
    }
  }
}

}  // namespace

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& key) {
  std::vector<double> values;
  std::string item;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!item.empty()) {
        try {
          values.push_back(std::stod(item));
        } catch (const std::exception&) {
          throw ConfigError("config: bad number '" + item + "' in " + key);
        }
        item.clear();
      }
    } else {
      item.push_back(c);
    }
  }
  return values;
}

double parse_double(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number '" + text + "' for " + key);
  }
}

int parse_int(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer '" + text + "' for " + key);
  }
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    throw ConfigError("config file was not readable (missing?): " + path);
  }

  RunConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config: malformed section header at line " +
                          std::to_string(lineno));
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: expected key = value at line " +
                        std::to_string(lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string full = section + "." + key;

    if (full == "geometry.L") cfg.length = parse_double(value, full);
    else if (full == "geometry.a") cfg.fluid_top = parse_double(value, full);
    else if (full == "geometry.b") cfg.porous = parse_double(value, full);
    else if (full == "geometry.c") cfg.fluid_bottom = parse_double(value, full);
    else if (full == "params.kappa") cfg.kappa = parse_double(value, full);
    else if (full == "params.mu") cfg.mu = parse_double(value, full);
    else if (full == "params.alpha") cfg.alpha = parse_double(value, full);
    else if (full == "params.beta") cfg.beta = parse_double(value, full);
    else if (full == "data.kind") cfg.data_kind = value;
    else if (full == "data.seed") cfg.seed = static_cast<unsigned>(parse_int(value, full));
    else if (full == "data.modes") cfg.data_modes = parse_int(value, full);
    else if (full == "data.file") cfg.data_file = value;
    else if (full == "discretization.n_modes") cfg.n_modes = parse_int(value, full);
    else if (full == "discretization.n_points") cfg.n_points = parse_int(value, full);
    else if (full == "discretization.layer_factor")
      cfg.layer_factor = parse_double(value, full);
    else if (full == "study.eps_list") cfg.eps_list = parse_double_list(value, full);
    else if (full == "study.order") cfg.order = parse_int(value, full);
    else if (full == "study.eps") cfg.eps = parse_double(value, full);
    else {
      throw ConfigError("config: unknown key '" + full + "' at line " +
                        std::to_string(lineno));
    }
  }
  return cfg;
}

ProblemData load_data_file(const std::string& path, const SlabGeometry& geom,
                           const ChannelGrids& grids, int n_modes) {
  (void)geom;
  std::ifstream in(path);
  if (!in.good()) throw ConfigError("data file does not exist: " + path);
  Json root;
  try {
    in >> root;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("data file: malformed JSON: ") + e.what());
  }

  ProblemData data = make_zero_data(grids, n_modes);
  if (root.contains("h")) read_interface(root["h"], data.h, n_modes);
  if (root.contains("l")) read_interface(root["l"], data.l, n_modes);

  if (root.contains("g")) {
    const char* names[3] = {"fluid_top", "porous", "fluid_bottom"};
    for (int si = 0; si < 3; ++si) {
      if (!root["g"].contains(names[si])) continue;
      const Json& comps = root["g"][names[si]];
      const Grid1D& grid = grids.grid(static_cast<Subdomain>(si));
      const char* dirs[2] = {"x", "y"};
      for (int dir = 0; dir < 2; ++dir) {
        if (!comps.contains(dirs[dir])) continue;
        const Json& modes = comps[dirs[dir]];
        for (int k = 0; k < static_cast<int>(modes.size()) && k <= n_modes; ++k) {
          // polynomial coefficients in y: [[re, im], ...]
          Eigen::VectorXcd values = Eigen::VectorXcd::Zero(grid.size());
          for (int i = 0; i < grid.size(); ++i) {
            Complex acc = 0.0;
            const double y = grid.nodes()(i);
            double yp = 1.0;
            for (const Json& cj : modes[k]) {
              acc += json_complex(cj) * yp;
              yp *= y;
            }
            values(i) = acc;
          }
          (dir == 0 ? data.gx : data.gy)[si][k] = values;
        }
      }
    }
  }
  return data;
}

}  // namespace bwkb
