// Times the parallel sweep kernels against the serial reference and checks
// that both produce identical results.
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "photocell/config.hpp"
#include "photocell/sweeps.hpp"

using namespace photocell;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool identical(const SweepResult& a, const SweepResult& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (a.points[i].enhancement != b.points[i].enhancement ||
        a.points[i].model_power != b.points[i].model_power)
      return false;
  return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time\n");
#endif

  const RunConfig cfg = preset_config("fig3");
  const auto gamma_grid = log_grid(1e-10, 1e-3, 12);

  auto t0 = std::chrono::steady_clock::now();
  const SweepResult serial = sweep_trapping(cfg.params, gamma_grid,
                                            cfg.j12_cap, cfg.eps_minus,
                                            Execution::serial);
  const double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const SweepResult parallel = sweep_trapping(cfg.params, gamma_grid,
                                              cfg.j12_cap, cfg.eps_minus,
                                              Execution::parallel);
  const double t_parallel = seconds_since(t0);

  std::printf("sweep-trapping (%zu points): serial %.3fs, parallel %.3fs, "
              "speedup %.2fx\n",
              gamma_grid.size(), t_serial, t_parallel, t_serial / t_parallel);
  if (!identical(serial, parallel)) {
    std::printf("FAIL: serial and parallel results differ\n");
    return 1;
  }
  std::printf("serial and parallel results are bit-identical\n");

  const RunConfig cfg4 = preset_config("fig4");
  const auto deps_grid = linear_grid(0.02, 0.3, 8);
  const auto j12_grid = linear_grid(0.002, 0.03, 8);

  t0 = std::chrono::steady_clock::now();
  const SweepResult surf_serial = enhancement_surface(
      cfg4.params, deps_grid, j12_grid, cfg4.eps_minus, Execution::serial);
  const double s_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const SweepResult surf_parallel = enhancement_surface(
      cfg4.params, deps_grid, j12_grid, cfg4.eps_minus, Execution::parallel);
  const double s_parallel = seconds_since(t0);

  std::printf("surface (%zu points): serial %.3fs, parallel %.3fs, "
              "speedup %.2fx\n",
              surf_serial.points.size(), s_serial, s_parallel,
              s_serial / s_parallel);
  if (!identical(surf_serial, surf_parallel)) {
    std::printf("FAIL: serial and parallel surfaces differ\n");
    return 1;
  }
  std::printf("serial and parallel surfaces are bit-identical\n");
  return 0;
}
