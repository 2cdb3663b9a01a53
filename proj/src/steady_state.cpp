#include "photocell/steady_state.hpp"

#include <cmath>

#include "photocell/constants.hpp"

namespace photocell {

SteadyState solve_steady_state(const RateMatrix& m) {
  const double max_rate = m.q.cwiseAbs().maxCoeff();
  if (max_rate == 0.0)
    throw NumericalError("solve_steady_state: zero rate matrix has no unique "
                         "steady state");

  // State-reduction (GTH) elimination on the jump rates. The update uses no
  // subtractions, so every population comes out with componentwise relative
  // accuracy; a generic linear solve would drown the thermally suppressed
  // trap populations (down to ~1e-30) in absolute roundoff.
  Eigen::Matrix<double, 5, 5> t = m.q.transpose();  // t(i, j): rate i -> j
  for (int i = 0; i < 5; ++i) t(i, i) = 0.0;        // diagonals unused
  for (int n = 4; n >= 1; --n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += t(n, j);
    if (s <= 0.0)
      throw NumericalError("solve_steady_state: degenerate rate network");
    for (int i = 0; i < n; ++i) {
      const double f = t(i, n) / s;
      t(i, n) = f;  // kept for the back-substitution
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j)
        if (j != i) t(i, j) += f * t(n, j);
    }
  }
  Populations p;
  p(0) = 1.0;
  for (int n = 1; n < 5; ++n) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += p(i) * t(i, n);
    p(n) = acc;
  }
  SteadyState state{p / p.sum()};

  const double residual = (m.q * state.populations).cwiseAbs().maxCoeff();
  if (!(residual < 1e-12 * max_rate))
    throw NumericalError("solve_steady_state: residual too large");
  return state;
}

Populations integrate_rate_ode(const RateMatrix& m, const Populations& p0,
                               double horizon) {
  if (horizon <= 0.0)
    throw InvalidParams("integrate_rate_ode: horizon must be positive");
  const double max_rate = m.q.cwiseAbs().maxCoeff();
  const double step_cap = max_rate > 0.0 ? 0.1 / max_rate : horizon;
  const long steps =
      std::max(1L, static_cast<long>(std::ceil(horizon / step_cap)));
  const double h = horizon / static_cast<double>(steps);

  Populations p = p0;
  for (long i = 0; i < steps; ++i) {
    const Populations k1 = m.q * p;
    const Populations k2 = m.q * (p + 0.5 * h * k1);
    const Populations k3 = m.q * (p + 0.5 * h * k2);
    const Populations k4 = m.q * (p + h * k3);
    p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

OperatingPoint operating_point(const SteadyState& state,
                               const PhotocellParams& params) {
  const double p_alpha = state.populations(kAlpha);
  const double p_beta = state.populations(kBeta);
  if (p_alpha <= 0.0 || p_beta <= 0.0)
    throw NumericalError("operating_point: voltage undefined for vanishing "
                         "trap populations");
  OperatingPoint op;
  op.current = params.gamma_alphabeta * p_alpha;
  op.voltage = (params.eps_alpha - params.eps_beta) +
               kBoltzmann * params.t_cold * std::log(p_alpha / p_beta);
  op.power = op.current * op.voltage;
  return op;
}

}  // namespace photocell
