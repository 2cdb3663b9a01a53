#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "photocell/params.hpp"

namespace photocell {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolved run configuration: model parameters plus sweep grids. The energy
// placement is specified through eps_minus / delta_eps / j12; site energies
// are derived.
struct RunConfig {
  PhotocellParams params;
  double eps_minus = 2.0;
  double delta_eps = 0.09;

  double j12_cap = 0.03;  // co-optimized J12 upper bound, eV

  // Generic one-axis grid (sweep-trapping, deviation, theta-rc, iv).
  double grid_min = 0.0;
  double grid_max = 0.0;
  int grid_points = 0;

  // Surface grids.
  double deps_min = 0.01, deps_max = 0.30;
  int deps_points = 15;
  double j12_min = 0.001, j12_max = 0.10;
  int j12_points = 15;

  std::string preset;
};

// Named parameter sets reproducing the published figure captions.
RunConfig preset_config(const std::string& name);

// key = value lines, '#' comments, merged over the preset defaults.
// Unknown keys, malformed numbers and invariant violations raise ConfigError
// naming the line and key.
RunConfig parse_config(std::istream& in, const std::string& preset_name);

// Emits a config in the same key = value format; parsing it back yields an
// identical RunConfig.
void write_config(std::ostream& out, const RunConfig& config);

}  // namespace photocell
