#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "photocell/exciton.hpp"
#include "photocell/params.hpp"

namespace photocell {

// Ordered basis of the population vector.
enum State : int { kPlus = 0, kMinus = 1, kAlpha = 2, kBeta = 3, kGround = 4 };
inline constexpr int kNumStates = 5;

enum class Bath { photon, phonon };

// One downward transition and its detailed-balance partner. `rate` is the
// bare rate; the generator entries carry the (N+1)/N occupation factors.
struct Transition {
  State from;   // upper state
  State to;     // lower state
  double rate;  // bare rate, eV
  double omega; // transition frequency, eV (> 0)
  Bath bath;
  double temperature;  // K
};

// Population-transfer generator dP/dt = Q P over {+, -, alpha, beta, g}.
struct RateMatrix {
  Eigen::Matrix<double, 5, 5> q;
  std::vector<Transition> transitions;
  ExcitonBasis basis;
};

// Assembles all transitions of the configured model. Throws InvalidParams if
// the level ordering eps_beta < eps_alpha < eps_minus or eps_beta > 0 fails.
RateMatrix build_rate_matrix(const PhotocellParams& params);

}  // namespace photocell
