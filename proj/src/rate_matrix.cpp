#include "photocell/rate_matrix.hpp"

#include <cmath>

namespace photocell {

namespace {

void add_transition(RateMatrix& m, State from, State to, double rate,
                    double omega, Bath bath, double temperature) {
  if (rate == 0.0) return;
  const double n = bose_occupation(omega, temperature);
  m.q(to, from) += rate * (n + 1.0);    // downward
  m.q(from, to) += rate * n;            // upward
  m.q(from, from) -= rate * (n + 1.0);
  m.q(to, to) -= rate * n;
  m.transitions.push_back({from, to, rate, omega, bath, temperature});
}

}  // namespace

RateMatrix build_rate_matrix(const PhotocellParams& params) {
  const ExcitonBasis basis = diagonalize_dimer(params);
  if (!(params.eps_alpha < basis.eps_minus && params.eps_beta < params.eps_alpha &&
        params.eps_beta > 0.0))
    throw InvalidParams(
        "build_rate_matrix: level ordering must satisfy "
        "0 < eps_beta < eps_alpha < eps_minus");

  RateMatrix m;
  m.q.setZero();
  m.basis = basis;

  double gpg, gmg, gpm;
  if (params.model == ModelKind::independent) {
    gpg = gmg = 0.5 * params.optical_sum();
    gpm = 0.0;
  } else {
    const OpticalRates opt =
        exciton_optical_rates(basis, params.z, params.gamma_2g);
    gpg = opt.gamma_plus_g;
    gmg = opt.gamma_minus_g;
    const double p1 = basis.ovl_p1 * basis.ovl_p1;
    const double m1 = basis.ovl_m1 * basis.ovl_m1;
    gpm = p1 * m1 * (params.gamma_11 + params.gamma_22);
  }
  const TrapRates trap = trap_transfer_rates(params, basis);

  add_transition(m, kPlus, kGround, gpg, basis.eps_plus, Bath::photon,
                 params.t_hot);
  add_transition(m, kMinus, kGround, gmg, basis.eps_minus, Bath::photon,
                 params.t_hot);
  add_transition(m, kPlus, kMinus, gpm, basis.omega_r, Bath::phonon,
                 params.t_cold);
  add_transition(m, kPlus, kAlpha, trap.gamma_plus_alpha,
                 basis.eps_plus - params.eps_alpha, Bath::phonon,
                 params.t_cold);
  add_transition(m, kMinus, kAlpha, trap.gamma_minus_alpha,
                 basis.eps_minus - params.eps_alpha, Bath::phonon,
                 params.t_cold);
  add_transition(m, kAlpha, kBeta, params.gamma_alphabeta,
                 params.eps_alpha - params.eps_beta, Bath::phonon,
                 params.t_cold);
  add_transition(m, kAlpha, kGround, params.chi * params.gamma_alphabeta,
                 params.eps_alpha, Bath::phonon, params.t_cold);
  add_transition(m, kBeta, kGround, params.gamma_betag, params.eps_beta,
                 Bath::phonon, params.t_cold);
  return m;
}

}  // namespace photocell
