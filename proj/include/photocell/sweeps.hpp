#pragma once

#include <optional>
#include <string>
#include <vector>

#include "photocell/optimize.hpp"
#include "photocell/params.hpp"

namespace photocell {

enum class Execution { serial, parallel };

// One evaluated sweep point. Unused fields stay at their defaults.
struct SweepPoint {
  double axis1 = 0.0;
  double axis2 = 0.0;
  double model_power = 0.0;
  double benchmark_power = 0.0;
  double enhancement = 0.0;
  double best_gamma_alphabeta = 0.0;
  double best_j12 = 0.0;
  double tan2_phi = 0.0;
  double reference = 0.0;       // per-sweep comparison column (see axis docs)
  double reference_tan2 = 0.0;  // darkness of the comparison model
};

struct SweepResult {
  std::string axis1_name;
  std::string axis2_name;
  std::vector<SweepPoint> points;
};

// I-V / P-V scan: one steady-state solve per gamma_alphabeta value, all other
// parameters frozen.
std::vector<std::pair<double, OperatingPoint>> iv_curve(
    const PhotocellParams& params, const std::vector<double>& gamma_grid);

// Enhancement vs trapping rate. Per point, J12 in (0, j12_cap] and
// gamma_alphabeta are co-optimized; for the asymmetric model z follows the
// dark-state relation at the configured delta_eps. eps_minus is held fixed.
SweepResult sweep_trapping(const PhotocellParams& base,
                           const std::vector<double>& gamma_1alpha_grid,
                           double j12_cap, double eps_minus,
                           Execution exec = Execution::parallel);

// Asymmetric enhancement over (delta_eps, J12), z from the dark-state
// relation at each grid point; `reference` carries the symmetric-model
// enhancement at the same J12.
SweepResult enhancement_surface(const PhotocellParams& base,
                                const std::vector<double>& delta_eps_grid,
                                const std::vector<double>& j12_grid,
                                double eps_minus,
                                Execution exec = Execution::parallel);

// Detuning away from the dark-state condition: delta_eps -> delta_eps + delta
// with z frozen at the delta = 0 value. Emits both the asymmetric model and
// the symmetric variant (delta_eps = delta, z = 1) per point; `reference`
// carries the symmetric enhancement, `tan2_phi` the asymmetric darkness.
SweepResult deviation_sweep(const PhotocellParams& base,
                            const std::vector<double>& delta_grid,
                            double eps_minus,
                            Execution exec = Execution::parallel);

// Symmetric-model enhancement vs the trap coupling phase theta_rc.
SweepResult theta_rc_sweep(const PhotocellParams& base,
                           const std::vector<double>& theta_grid,
                           double eps_minus,
                           Execution exec = Execution::parallel);

// Helpers shared by the sweeps and the CLI.
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

// Dipole asymmetry solving the dark-state relation for a given coupling:
// z = (sqrt(delta_eps^2 + j12^2) - delta_eps) / j12.
double dark_z_for_coupling(double delta_eps, double j12);

// Applies the fair-comparison constraint: sets z, J12 and delta_eps on a copy
// of `base`, rescales gamma_1g/gamma_2g to preserve their sum, re-anchors
// eps_minus.
PhotocellParams configure_coupled_model(const PhotocellParams& base,
                                        ModelKind kind, double delta_eps,
                                        double j12, double z,
                                        double eps_minus);

}  // namespace photocell
