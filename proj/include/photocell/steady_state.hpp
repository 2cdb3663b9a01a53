#pragma once

#include <Eigen/Dense>

#include "photocell/params.hpp"
#include "photocell/rate_matrix.hpp"

namespace photocell {

using Populations = Eigen::Matrix<double, 5, 1>;

struct SteadyState {
  Populations populations;  // (P+, P-, Palpha, Pbeta, Pg), sums to 1
};

// Effective operating point of the reaction centre. Current in units of
// e * eV, voltage in eV (e = 1), power = current * voltage.
struct OperatingPoint {
  double current;
  double voltage;
  double power;
};

// Unique normalized null vector of Q. Throws NumericalError when the rate
// network is degenerate (null space not one-dimensional).
SteadyState solve_steady_state(const RateMatrix& q);

// Fixed-step RK4 integration of dP/dt = Q P; independent oracle for the
// steady-state solver. Throws on nonpositive horizon.
Populations integrate_rate_ode(const RateMatrix& q, const Populations& p0,
                               double horizon);

// I = gamma_alphabeta * P_alpha, V = (eps_alpha - eps_beta)
// + kB T_c ln(P_alpha / P_beta). The sign on the log term is fixed by the
// requirement that V vanish identically for a thermal state at T_c.
// Throws when either trap population is zero.
OperatingPoint operating_point(const SteadyState& state,
                               const PhotocellParams& params);

}  // namespace photocell
