#include "photocell/exciton.hpp"

#include <cmath>

#include "photocell/constants.hpp"

namespace photocell {

ExcitonBasis diagonalize_dimer(const PhotocellParams& params) {
  const double j = params.j12();
  const double delta = params.eps2 - params.eps1;
  const double mean = 0.5 * (params.eps1 + params.eps2);
  const double omega_r = std::hypot(delta, j);

  ExcitonBasis basis;
  basis.eps_plus = mean + 0.5 * omega_r;
  basis.eps_minus = mean - 0.5 * omega_r;
  basis.omega_r = omega_r;

  if (omega_r == 0.0) {
    // Degenerate uncoupled dimer: sites are eigenstates.
    basis.ovl_p1 = 0.0;
    basis.ovl_p2 = 1.0;
  } else {
    // Eigenvector of [[eps1, j/2], [j/2, eps2]] for eps_plus. Pick the
    // numerically stable component to avoid cancellation.
    double v1 = 0.5 * j;
    double v2 = basis.eps_plus - params.eps1;
    if (std::abs(v2) < std::abs(v1)) {
      v2 = 0.5 * j;
      v1 = basis.eps_plus - params.eps2;
    }
    const double norm = std::hypot(v1, v2);
    basis.ovl_p1 = v1 / norm;
    basis.ovl_p2 = v2 / norm;
    if (basis.ovl_p2 < 0.0) {
      basis.ovl_p1 = -basis.ovl_p1;
      basis.ovl_p2 = -basis.ovl_p2;
    }
  }
  // Orthogonal partner; this sign choice makes z<-|1> + <-|2> vanish on the
  // dark-state manifold.
  basis.ovl_m1 = basis.ovl_p2;
  basis.ovl_m2 = -basis.ovl_p1;
  return basis;
}

double bose_occupation(double omega, double temperature) {
  if (omega < 0.0)
    throw InvalidParams("bose_occupation: transitions must be oriented "
                        "downward (omega >= 0)");
  if (temperature <= 0.0)
    throw InvalidParams("bose_occupation: temperature must be positive");
  if (omega == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / (kBoltzmann * temperature));
}

double darkness_angle(double delta_eps, double z, double j12_bare,
                      double phi) {
  const double j = j12_bare * std::cos(phi);
  const double omega_r = std::hypot(delta_eps, j);
  if (omega_r == 0.0)
    throw NumericalError("darkness_angle: undefined ratio for a fully "
                         "degenerate uncoupled dimer");
  const double zz = z * z;
  const double num =
      omega_r * (1.0 + zz) - delta_eps * (1.0 - zz) - 2.0 * z * j;
  const double den =
      omega_r * (1.0 + zz) + delta_eps * (1.0 - zz) + 2.0 * z * j;
  return num / den;
}

double dark_state_coupling(double z, double delta_eps) {
  if (z >= 1.0)
    throw NumericalError("dark_state_coupling diverges at z = 1");
  return 2.0 * z * delta_eps / (1.0 - z * z);
}

OpticalRates exciton_optical_rates(const ExcitonBasis& basis, double z,
                                   double gamma_2g) {
  const double amp_p = z * basis.ovl_p1 + basis.ovl_p2;
  const double amp_m = z * basis.ovl_m1 + basis.ovl_m2;
  return {amp_p * amp_p * gamma_2g, amp_m * amp_m * gamma_2g};
}

TrapRates trap_transfer_rates(const PhotocellParams& params,
                              const ExcitonBasis& basis) {
  switch (params.model) {
    case ModelKind::independent:
      return {params.gamma_1alpha, params.gamma_1alpha};
    case ModelKind::symmetric: {
      const double ratio =
          basis.omega_r > 0.0 ? params.j12() / basis.omega_r : 1.0;
      const double c = ratio * std::cos(params.theta_rc);
      return {(1.0 + c) * params.gamma_1alpha,
              (1.0 - c) * params.gamma_1alpha};
    }
    case ModelKind::asymmetric: {
      return {basis.ovl_p1 * basis.ovl_p1 * params.gamma_1alpha,
              basis.ovl_m1 * basis.ovl_m1 * params.gamma_1alpha};
    }
  }
  throw InvalidParams("unreachable model kind");
}

PhotocellParams fix_lower_exciton(const PhotocellParams& params,
                                  double target_eps_minus) {
  const double delta = params.eps2 - params.eps1;
  const double omega_r = std::hypot(delta, params.j12());
  PhotocellParams shifted = params;
  shifted.eps1 = target_eps_minus - 0.5 * delta + 0.5 * omega_r;
  shifted.eps2 = shifted.eps1 + delta;
  return shifted;
}

}  // namespace photocell
