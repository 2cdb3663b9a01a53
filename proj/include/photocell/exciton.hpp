#pragma once

#include "photocell/params.hpp"

namespace photocell {

// Eigenpairs of the single-excitation dimer block. Overlaps are real; the
// sign convention fixes ovl_p2 >= 0 with (ovl_m1, ovl_m2) = (ovl_p2, -ovl_p1)
// so the overlap matrix is orthonormal.
struct ExcitonBasis {
  double eps_plus;   // upper eigenenergy
  double eps_minus;  // lower eigenenergy
  double ovl_p1, ovl_p2;  // <+|1>, <+|2>
  double ovl_m1, ovl_m2;  // <-|1>, <-|2>
  double omega_r;    // Rabi splitting eps_plus - eps_minus
};

// Diagonalizes [[eps1, J12/2], [J12/2, eps2]] with J12 = j12_bare cos(phi).
ExcitonBasis diagonalize_dimer(const PhotocellParams& params);

// Thermal occupation 1/(exp(omega/kB T) - 1); zero at omega = 0 (only valid
// together with a vanishing base rate). Throws on negative omega.
double bose_occupation(double omega, double temperature);

// Darkness metric tan^2(Phi) = gamma_-g / gamma_+g of the general dimer.
// Throws NumericalError when delta_eps and the effective coupling both vanish.
double darkness_angle(double delta_eps, double z, double j12_bare, double phi);

// Coupling that makes the lower exciton fully dark: 2 z delta_eps / (1 - z^2).
// Throws NumericalError at z = 1.
double dark_state_coupling(double z, double delta_eps);

struct OpticalRates {
  double gamma_plus_g;
  double gamma_minus_g;
};

// Bright/dark optical rates gamma_{+-,g} = |z<+-|1> + <+-|2>|^2 gamma_2g.
OpticalRates exciton_optical_rates(const ExcitonBasis& basis, double z,
                                   double gamma_2g);

struct TrapRates {
  double gamma_plus_alpha;
  double gamma_minus_alpha;
};

// Transfer rates into the trap; the formula branches on the model kind.
TrapRates trap_transfer_rates(const PhotocellParams& params,
                              const ExcitonBasis& basis);

// Rigidly shifts eps1, eps2 so the lower eigenvalue lands on the target,
// keeping delta_eps and J12 fixed.
PhotocellParams fix_lower_exciton(const PhotocellParams& params,
                                  double target_eps_minus);

}  // namespace photocell
