#include "photocell/config.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "photocell/exciton.hpp"
#include "photocell/sweeps.hpp"

namespace photocell {

namespace {

RunConfig base_preset() {
  RunConfig cfg;
  PhotocellParams& p = cfg.params;
  p.model = ModelKind::asymmetric;
  p.gamma_11 = p.gamma_22 = 0.005;
  p.gamma_betag = 0.0248;
  p.gamma_1alpha = 6e-7;
  p.gamma_2alpha = 0.0;
  p.chi = 0.2;
  p.t_hot = 6000.0;
  p.t_cold = 300.0;
  p.eps_alpha = 1.8;
  p.eps_beta = 0.2;
  p.theta_rc = M_PI;
  p.phi = 0.0;
  p.j12_bare = 0.01;
  cfg.eps_minus = 2.0;
  cfg.delta_eps = 0.09;
  cfg.j12_cap = 0.03;
  return cfg;
}

void set_optical_sum(RunConfig& cfg, double sum) {
  cfg.params.gamma_2g = sum / (1.0 + cfg.params.z * cfg.params.z);
  cfg.params.gamma_1g = sum - cfg.params.gamma_2g;
}

}  // namespace

RunConfig preset_config(const std::string& name) {
  RunConfig cfg = base_preset();
  cfg.preset = name;
  PhotocellParams& p = cfg.params;

  if (name == "fig3") {
    p.model = ModelKind::asymmetric;
    cfg.grid_min = 1e-10;
    cfg.grid_max = 1e-3;
    cfg.grid_points = 15;
    p.z = dark_z_for_coupling(cfg.delta_eps, p.j12_bare);
    set_optical_sum(cfg, 1.24e-6);
  } else if (name == "fig4") {
    p.model = ModelKind::asymmetric;
    p.z = dark_z_for_coupling(cfg.delta_eps, p.j12_bare);
    set_optical_sum(cfg, 1.24e-6);
  } else if (name == "fig5") {
    p.model = ModelKind::asymmetric;
    cfg.grid_min = -0.03;
    cfg.grid_max = 0.03;
    cfg.grid_points = 25;
    p.z = dark_z_for_coupling(cfg.delta_eps, p.j12_bare);
    set_optical_sum(cfg, 1.2e-6);
  } else if (name == "fig8") {
    p.model = ModelKind::symmetric;
    cfg.delta_eps = 0.0;
    p.z = 1.0;
    cfg.grid_min = 0.5 * M_PI;
    cfg.grid_max = 1.5 * M_PI;
    cfg.grid_points = 25;
    set_optical_sum(cfg, 1.2e-6);
  } else if (name == "ivpv") {
    p.model = ModelKind::asymmetric;
    cfg.delta_eps = 0.1;
    cfg.grid_min = 1e-12;
    cfg.grid_max = 1.0;
    cfg.grid_points = 200;
    p.z = dark_z_for_coupling(cfg.delta_eps, p.j12_bare);
    set_optical_sum(cfg, 1.24e-6);
  } else {
    throw ConfigError("unknown preset: " + name);
  }

  p.eps1 = 0.0;
  p.eps2 = cfg.delta_eps;
  cfg.params = fix_lower_exciton(p, cfg.eps_minus);
  return cfg;
}

RunConfig parse_config(std::istream& in, const std::string& preset_name) {
  RunConfig cfg = preset_config(preset_name);
  PhotocellParams& p = cfg.params;

  std::map<std::string, double> values;
  std::set<std::string> seen;
  std::string model_name;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    if (seen.count(key))
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key " +
                        key);
    seen.insert(key);

    if (key == "model") {
      try {
        p.model = model_kind_from_string(value);
      } catch (const InvalidParams& e) {
        throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
      }
      model_name = value;
      continue;
    }
    double number = 0.0;
    std::size_t pos = 0;
    try {
      number = std::stod(value, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != value.size())
      throw ConfigError("line " + std::to_string(line_no) + ": key " + key +
                        ": unparsable number '" + value + "'");
    values[key] = number;
  }

  auto take = [&](const char* key, double& slot) {
    const auto it = values.find(key);
    if (it == values.end()) return false;
    slot = it->second;
    values.erase(it);
    return true;
  };
  auto take_int = [&](const char* key, int& slot) {
    double v;
    if (!take(key, v)) return false;
    if (v != std::floor(v) || v < 0)
      throw ConfigError(std::string("key ") + key +
                        " must be a nonnegative integer");
    slot = static_cast<int>(v);
    return true;
  };

  take("eps_minus", cfg.eps_minus);
  take("delta_eps", cfg.delta_eps);
  take("j12", p.j12_bare);
  take("phi", p.phi);
  take("theta_rc", p.theta_rc);
  take("eps_alpha", p.eps_alpha);
  take("eps_beta", p.eps_beta);
  take("gamma_11", p.gamma_11);
  take("gamma_22", p.gamma_22);
  take("gamma_1alpha", p.gamma_1alpha);
  take("gamma_2alpha", p.gamma_2alpha);
  take("gamma_betag", p.gamma_betag);
  take("gamma_alphabeta", p.gamma_alphabeta);
  take("chi", p.chi);
  take("t_hot", p.t_hot);
  take("t_cold", p.t_cold);
  take("j12_cap", cfg.j12_cap);
  take("grid_min", cfg.grid_min);
  take("grid_max", cfg.grid_max);
  take_int("grid_points", cfg.grid_points);
  take("deps_min", cfg.deps_min);
  take("deps_max", cfg.deps_max);
  take_int("deps_points", cfg.deps_points);
  take("j12_min", cfg.j12_min);
  take("j12_max", cfg.j12_max);
  take_int("j12_points", cfg.j12_points);

  double z_explicit;
  const bool has_z = take("z", z_explicit);
  double g1g_explicit, g2g_explicit;
  const bool has_g1g = take("gamma_1g", g1g_explicit);
  const bool has_g2g = take("gamma_2g", g2g_explicit);

  if (!values.empty())
    throw ConfigError("unknown key: " + values.begin()->first);

  // Model-kind constraints and the dipole asymmetry.
  switch (p.model) {
    case ModelKind::symmetric:
      if (has_z && z_explicit != 1.0)
        throw ConfigError("key z: symmetric model requires z = 1");
      if (seen.count("delta_eps") && cfg.delta_eps != 0.0)
        throw ConfigError("key delta_eps: symmetric model requires eps1 = eps2");
      cfg.delta_eps = 0.0;
      p.z = 1.0;
      break;
    case ModelKind::independent:
      if (seen.count("j12") && p.j12_bare != 0.0)
        throw ConfigError("key j12: independent model requires J12 = 0");
      p.j12_bare = 0.0;
      cfg.delta_eps = 0.0;
      p.z = 1.0;
      p.gamma_2alpha = p.gamma_1alpha;
      break;
    case ModelKind::asymmetric:
      p.gamma_2alpha = 0.0;
      if (has_z)
        p.z = z_explicit;
      else
        p.z = dark_z_for_coupling(cfg.delta_eps, p.j12_bare * std::cos(p.phi));
      break;
  }

  // Optical rates: explicit values win, otherwise the preset sum is split
  // according to z (rates scale as squared dipoles).
  if (has_g1g && has_g2g) {
    p.gamma_1g = g1g_explicit;
    p.gamma_2g = g2g_explicit;
    const double expected = p.z * p.z * p.gamma_2g;
    if (std::abs(p.gamma_1g - expected) >
        1e-6 * std::max(p.optical_sum(), 1e-300))
      throw ConfigError("key gamma_1g: inconsistent with z^2 * gamma_2g");
  } else if (has_g2g) {
    p.gamma_2g = g2g_explicit;
    p.gamma_1g = p.z * p.z * p.gamma_2g;
  } else if (has_g1g) {
    if (p.z == 0.0)
      throw ConfigError("key gamma_1g: cannot infer gamma_2g at z = 0");
    p.gamma_1g = g1g_explicit;
    p.gamma_2g = g1g_explicit / (p.z * p.z);
  } else {
    set_optical_sum(cfg, p.optical_sum());
  }

  p.eps1 = 0.0;
  p.eps2 = cfg.delta_eps;
  cfg.params = fix_lower_exciton(p, cfg.eps_minus);

  try {
    cfg.params.validate();
  } catch (const InvalidParams& e) {
    throw ConfigError(std::string("invalid configuration: ") + e.what());
  }
  return cfg;
}

void write_config(std::ostream& out, const RunConfig& cfg) {
  const PhotocellParams& p = cfg.params;
  out.precision(17);
  out << "model = " << to_string(p.model) << '\n';
  out << "eps_minus = " << cfg.eps_minus << '\n';
  out << "delta_eps = " << cfg.delta_eps << '\n';
  out << "j12 = " << p.j12_bare << '\n';
  out << "phi = " << p.phi << '\n';
  out << "z = " << p.z << '\n';
  out << "theta_rc = " << p.theta_rc << '\n';
  out << "eps_alpha = " << p.eps_alpha << '\n';
  out << "eps_beta = " << p.eps_beta << '\n';
  out << "gamma_1g = " << p.gamma_1g << '\n';
  out << "gamma_2g = " << p.gamma_2g << '\n';
  out << "gamma_11 = " << p.gamma_11 << '\n';
  out << "gamma_22 = " << p.gamma_22 << '\n';
  out << "gamma_1alpha = " << p.gamma_1alpha << '\n';
  out << "gamma_2alpha = " << p.gamma_2alpha << '\n';
  out << "gamma_alphabeta = " << p.gamma_alphabeta << '\n';
  out << "gamma_betag = " << p.gamma_betag << '\n';
  out << "chi = " << p.chi << '\n';
  out << "t_hot = " << p.t_hot << '\n';
  out << "t_cold = " << p.t_cold << '\n';
  out << "j12_cap = " << cfg.j12_cap << '\n';
  out << "grid_min = " << cfg.grid_min << '\n';
  out << "grid_max = " << cfg.grid_max << '\n';
  out << "grid_points = " << cfg.grid_points << '\n';
  out << "deps_min = " << cfg.deps_min << '\n';
  out << "deps_max = " << cfg.deps_max << '\n';
  out << "deps_points = " << cfg.deps_points << '\n';
  out << "j12_min = " << cfg.j12_min << '\n';
  out << "j12_max = " << cfg.j12_max << '\n';
  out << "j12_points = " << cfg.j12_points << '\n';
}

}  // namespace photocell
