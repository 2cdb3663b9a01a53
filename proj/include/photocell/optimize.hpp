#pragma once

#include <functional>

#include "photocell/params.hpp"
#include "photocell/steady_state.hpp"

namespace photocell {

struct OptimizationResult {
  double best_gamma_alphabeta = 0.0;
  OperatingPoint best_point{0.0, 0.0, 0.0};
  int evaluations = 0;
  bool zero_power = false;  // set when no probe produced positive power
};

// Power at a single trap-decay rate, all other parameters fixed.
double power_at(const PhotocellParams& params, double gamma_alphabeta);

// Deterministic maximization of power over gamma_alphabeta: 200 log-spaced
// probes on [1e-12, 1] eV followed by golden-section refinement of the best
// bracket.
OptimizationResult maximize_power(const PhotocellParams& params);

// Same strategy for an arbitrary scalar function on a log-spaced interval;
// shared by the nested J12 optimization.
OptimizationResult maximize_on_log_grid(const std::function<double(double)>& f,
                                        double lo, double hi, int grid_points);

// Independent-model benchmark with matched optical sum, eps_minus and
// gamma_1alpha.
PhotocellParams benchmark_of(const PhotocellParams& model);

// Ratio of maximized powers, model over benchmark. Throws NumericalError when
// the benchmark power is zero.
double enhancement_ratio(const PhotocellParams& model_params,
                         const PhotocellParams& benchmark_params);

}  // namespace photocell
