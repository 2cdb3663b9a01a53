#include "photocell/sweeps.hpp"

#include <cmath>
#include <stdexcept>

#include "photocell/rate_matrix.hpp"

namespace photocell {

namespace {

constexpr int kJ12GridPoints = 60;

// Runs f(i) for every index, optionally with OpenMP. The first captured
// exception is rethrown after the loop so results stay order-independent.
template <typename F>
void for_each_index(int n, Execution exec, F&& f) {
  std::string error;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (const std::exception& e) {
        if (error.empty()) error = e.what();
      }
    }
  }
  if (!error.empty()) throw NumericalError(error);
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> grid(n);
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (int i = 0; i < n; ++i)
    grid[i] = std::pow(10.0, llo + (lhi - llo) * i / std::max(1, n - 1));
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * i / std::max(1, n - 1);
  return grid;
}

double dark_z_for_coupling(double delta_eps, double j12) {
  if (j12 == 0.0) return 0.0;
  return (std::hypot(delta_eps, j12) - delta_eps) / j12;
}

PhotocellParams configure_coupled_model(const PhotocellParams& base,
                                        ModelKind kind, double delta_eps,
                                        double j12, double z,
                                        double eps_minus) {
  PhotocellParams p = base;
  p.model = kind;
  p.j12_bare = j12;
  p.phi = 0.0;
  p.z = z;
  const double sum = base.optical_sum();
  p.gamma_2g = sum / (1.0 + z * z);
  p.gamma_1g = z * z * p.gamma_2g;
  if (kind == ModelKind::asymmetric) p.gamma_2alpha = 0.0;
  p.eps1 = 0.0;
  p.eps2 = delta_eps;
  return fix_lower_exciton(p, eps_minus);
}

std::vector<std::pair<double, OperatingPoint>> iv_curve(
    const PhotocellParams& params, const std::vector<double>& gamma_grid) {
  std::vector<std::pair<double, OperatingPoint>> curve;
  curve.reserve(gamma_grid.size());
  for (double g : gamma_grid) {
    PhotocellParams p = params;
    p.gamma_alphabeta = g;
    try {
      curve.emplace_back(
          g, operating_point(solve_steady_state(build_rate_matrix(p)), p));
    } catch (const std::exception& e) {
      throw NumericalError("iv_curve at gamma_alphabeta = " +
                           std::to_string(g) + ": " + e.what());
    }
  }
  return curve;
}

namespace {

// Model power with J12 co-optimized on (0, cap]; z follows the dark-state
// relation for the asymmetric model, stays 1 for the symmetric one.
OptimizationResult optimize_j12(const PhotocellParams& base, ModelKind kind,
                                double delta_eps, double j12_cap,
                                double eps_minus) {
  auto power_for_j12 = [&](double j12) {
    PhotocellParams p =
        kind == ModelKind::asymmetric
            ? configure_coupled_model(base, kind, delta_eps, j12,
                                      dark_z_for_coupling(delta_eps, j12),
                                      eps_minus)
            : configure_coupled_model(base, kind, 0.0, j12, 1.0, eps_minus);
    return maximize_power(p).best_point.power;
  };
  return maximize_on_log_grid(power_for_j12, 1e-5, j12_cap, kJ12GridPoints);
}

}  // namespace

SweepResult sweep_trapping(const PhotocellParams& base,
                           const std::vector<double>& gamma_1alpha_grid,
                           double j12_cap, double eps_minus, Execution exec) {
  SweepResult result;
  result.axis1_name = "gamma_1alpha";
  result.points.resize(gamma_1alpha_grid.size());
  const double delta_eps = base.delta_eps();

  for_each_index(static_cast<int>(gamma_1alpha_grid.size()), exec, [&](int i) {
    PhotocellParams at = base;
    at.gamma_1alpha = gamma_1alpha_grid[i];

    const OptimizationResult model =
        optimize_j12(at, base.model, delta_eps, j12_cap, eps_minus);
    const PhotocellParams bench = benchmark_of(
        configure_coupled_model(at, base.model, 0.0, 1e-3, 1.0, eps_minus));
    const OptimizationResult benchmark = maximize_power(bench);

    SweepPoint& pt = result.points[i];
    pt.axis1 = gamma_1alpha_grid[i];
    pt.model_power = model.best_point.power;
    pt.benchmark_power = benchmark.best_point.power;
    pt.enhancement = model.best_point.power / benchmark.best_point.power;
    pt.best_j12 = model.best_gamma_alphabeta;  // outer axis is J12 here

    const double j12 = pt.best_j12;
    const PhotocellParams best =
        base.model == ModelKind::asymmetric
            ? configure_coupled_model(at, base.model, delta_eps, j12,
                                      dark_z_for_coupling(delta_eps, j12),
                                      eps_minus)
            : configure_coupled_model(at, base.model, 0.0, j12, 1.0,
                                      eps_minus);
    pt.best_gamma_alphabeta = maximize_power(best).best_gamma_alphabeta;
  });
  return result;
}

SweepResult enhancement_surface(const PhotocellParams& base,
                                const std::vector<double>& delta_eps_grid,
                                const std::vector<double>& j12_grid,
                                double eps_minus, Execution exec) {
  SweepResult result;
  result.axis1_name = "delta_eps";
  result.axis2_name = "j12";
  const int nd = static_cast<int>(delta_eps_grid.size());
  const int nj = static_cast<int>(j12_grid.size());
  result.points.resize(static_cast<std::size_t>(nd) * nj);

  const PhotocellParams bench = benchmark_of(
      configure_coupled_model(base, ModelKind::asymmetric, 0.09, 1e-3,
                              dark_z_for_coupling(0.09, 1e-3), eps_minus));
  const double benchmark_power = maximize_power(bench).best_point.power;

  // Symmetric reference depends on J12 only.
  std::vector<double> symmetric_power(nj);
  for_each_index(nj, exec, [&](int j) {
    symmetric_power[j] =
        maximize_power(configure_coupled_model(base, ModelKind::symmetric, 0.0,
                                               j12_grid[j], 1.0, eps_minus))
            .best_point.power;
  });

  for_each_index(nd * nj, exec, [&](int idx) {
    const int i = idx / nj;
    const int j = idx % nj;
    const double delta_eps = delta_eps_grid[i];
    const double j12 = j12_grid[j];
    const double z = dark_z_for_coupling(delta_eps, j12);
    const PhotocellParams p = configure_coupled_model(
        base, ModelKind::asymmetric, delta_eps, j12, z, eps_minus);
    const OptimizationResult model = maximize_power(p);

    SweepPoint& pt = result.points[idx];
    pt.axis1 = delta_eps;
    pt.axis2 = j12;
    pt.model_power = model.best_point.power;
    pt.benchmark_power = benchmark_power;
    pt.enhancement = model.best_point.power / benchmark_power;
    pt.best_gamma_alphabeta = model.best_gamma_alphabeta;
    pt.reference = symmetric_power[j] / benchmark_power;
    pt.tan2_phi = darkness_angle(delta_eps, z, j12, 0.0);
  });
  return result;
}

SweepResult deviation_sweep(const PhotocellParams& base,
                            const std::vector<double>& delta_grid,
                            double eps_minus, Execution exec) {
  SweepResult result;
  result.axis1_name = "delta";
  result.points.resize(delta_grid.size());

  const double delta_eps0 = base.delta_eps();
  const double j12 = base.j12_bare;
  const double z0 = dark_z_for_coupling(delta_eps0, j12);

  const PhotocellParams bench = benchmark_of(configure_coupled_model(
      base, ModelKind::asymmetric, delta_eps0, j12, z0, eps_minus));
  const double benchmark_power = maximize_power(bench).best_point.power;

  for_each_index(static_cast<int>(delta_grid.size()), exec, [&](int i) {
    const double delta = delta_grid[i];

    const PhotocellParams asym =
        configure_coupled_model(base, ModelKind::asymmetric,
                                delta_eps0 + delta, j12, z0, eps_minus);
    const PhotocellParams sym = configure_coupled_model(
        base, ModelKind::symmetric, delta, j12, 1.0, eps_minus);

    SweepPoint& pt = result.points[i];
    pt.axis1 = delta;
    pt.model_power = maximize_power(asym).best_point.power;
    pt.benchmark_power = benchmark_power;
    pt.enhancement = pt.model_power / benchmark_power;
    pt.reference = maximize_power(sym).best_point.power / benchmark_power;
    pt.tan2_phi = darkness_angle(delta_eps0 + delta, z0, j12, 0.0);
    pt.reference_tan2 = darkness_angle(delta, 1.0, j12, 0.0);
  });
  return result;
}

SweepResult theta_rc_sweep(const PhotocellParams& base,
                           const std::vector<double>& theta_grid,
                           double eps_minus, Execution exec) {
  SweepResult result;
  result.axis1_name = "theta_rc";
  result.points.resize(theta_grid.size());

  const PhotocellParams sym0 = configure_coupled_model(
      base, ModelKind::symmetric, 0.0, base.j12_bare, 1.0, eps_minus);
  const double benchmark_power =
      maximize_power(benchmark_of(sym0)).best_point.power;

  for_each_index(static_cast<int>(theta_grid.size()), exec, [&](int i) {
    PhotocellParams p = sym0;
    p.theta_rc = theta_grid[i];
    const OptimizationResult model = maximize_power(p);

    SweepPoint& pt = result.points[i];
    pt.axis1 = theta_grid[i];
    pt.model_power = model.best_point.power;
    pt.benchmark_power = benchmark_power;
    pt.enhancement = model.best_point.power / benchmark_power;
    pt.best_gamma_alphabeta = model.best_gamma_alphabeta;
  });
  return result;
}

}  // namespace photocell
