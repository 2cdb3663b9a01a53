#include "photocell/optimize.hpp"

#include <cmath>
#include <limits>

#include "photocell/rate_matrix.hpp"

namespace photocell {

namespace {
constexpr double kGammaLo = 1e-12;
constexpr double kGammaHi = 1.0;
constexpr int kGridPoints = 200;
constexpr double kGolden = 0.6180339887498949;
}  // namespace

double power_at(const PhotocellParams& params, double gamma_alphabeta) {
  PhotocellParams p = params;
  p.gamma_alphabeta = gamma_alphabeta;
  return operating_point(solve_steady_state(build_rate_matrix(p)), p).power;
}

OptimizationResult maximize_on_log_grid(const std::function<double(double)>& f,
                                        double lo, double hi,
                                        int grid_points) {
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  auto eval = [&](double lx) { return f(std::pow(10.0, lx)); };

  OptimizationResult result;
  int best = 0;
  double best_lx = llo;
  double best_f = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double lx = llo + (lhi - llo) * i / (grid_points - 1);
    const double fi = eval(lx);
    ++result.evaluations;
    if (fi > best_f) {
      best_f = fi;
      best_lx = lx;
      best = i;
    }
  }

  // Golden-section refinement inside the bracketing neighbours.
  const double step = (lhi - llo) / (grid_points - 1);
  double a = best > 0 ? best_lx - step : llo;
  double b = best < grid_points - 1 ? best_lx + step : lhi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);
  result.evaluations += 2;
  for (int it = 0; it < 70; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = eval(x1);
    }
    ++result.evaluations;
  }
  const double lx = f1 > f2 ? x1 : x2;
  const double fx = std::max(f1, f2);
  if (fx > best_f) {
    best_f = fx;
    best_lx = lx;
  }
  result.best_gamma_alphabeta = std::pow(10.0, best_lx);
  result.best_point.power = best_f;
  result.zero_power = !(best_f > 0.0);
  return result;
}

OptimizationResult maximize_power(const PhotocellParams& params) {
  OptimizationResult result = maximize_on_log_grid(
      [&](double g) { return power_at(params, g); }, kGammaLo, kGammaHi,
      kGridPoints);
  if (!result.zero_power) {
    PhotocellParams p = params;
    p.gamma_alphabeta = result.best_gamma_alphabeta;
    result.best_point =
        operating_point(solve_steady_state(build_rate_matrix(p)), p);
    // A dark cell thermalizes to V = 0; anything below the roundoff floor of
    // the log-ratio voltage is noise, not extractable work.
    if (result.best_point.voltage <= 1e-9) result.zero_power = true;
  }
  if (result.zero_power) result.best_point = {0.0, 0.0, 0.0};
  return result;
}

PhotocellParams benchmark_of(const PhotocellParams& model) {
  PhotocellParams b = model;
  b.model = ModelKind::independent;
  const double sum = model.optical_sum();
  b.gamma_1g = b.gamma_2g = 0.5 * sum;
  b.z = 1.0;
  b.j12_bare = 0.0;
  b.phi = 0.0;
  // Both degenerate levels sit at the model's lower exciton energy.
  const double eps_minus = diagonalize_dimer(model).eps_minus;
  b.eps1 = b.eps2 = eps_minus;
  b.gamma_2alpha = b.gamma_1alpha;
  return b;
}

double enhancement_ratio(const PhotocellParams& model_params,
                         const PhotocellParams& benchmark_params) {
  const double benchmark = maximize_power(benchmark_params).best_point.power;
  if (!(benchmark > 0.0))
    throw NumericalError("enhancement_ratio: benchmark power is zero");
  return maximize_power(model_params).best_point.power / benchmark;
}

}  // namespace photocell
