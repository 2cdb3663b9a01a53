#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "photocell/optimize.hpp"
#include "photocell/rate_matrix.hpp"
#include "photocell/steady_state.hpp"

namespace photocell {

using Matrix5c = Eigen::Matrix<std::complex<double>, 5, 5>;
using Matrix25c = Eigen::Matrix<std::complex<double>, 25, 25>;

// One system-bath coupling channel with its own independent bath. The
// operator is expressed in the energy eigenbasis.
struct CouplingChannel {
  std::string name;
  Matrix5c op;            // Hermitian
  Bath bath;
  double temperature;     // K
  double base_rate;       // eV
  double shift_fraction;  // reorganization shift as fraction of base_rate
};

// Half-Fourier transform of a flat-spectral-density bath correlation at one
// frequency.
struct BathLine {
  double omega;      // eV; sign convention: > 0 emission, < 0 absorption
  double real_part;  // half the golden-rule rate
  double imag_part;  // reorganization shift
};

struct LiouvilleGenerator {
  Matrix25c k;   // generator over |ij>, row-major pairing idx = 5*i + j
  bool secular;
  ExcitonBasis basis;
  std::array<double, 5> energies;  // eigenenergies of the five levels
};

// All coupling channels of the configured model: collective (or per-site)
// optical channel(s), local phonon channels, and the trap transfer chain.
std::vector<CouplingChannel> build_coupling_operators(
    const PhotocellParams& params);

BathLine half_fourier_rate(const CouplingChannel& channel, double omega);

// Full second-order generator in Liouville space. With `secular` set, every
// element connecting sectors with differing Bohr frequencies (beyond a 1e-9
// eV degeneracy tolerance) is zeroed, which reduces the population block to
// the Pauli rate matrix. `dephasing` adds a site-basis pure-dephasing
// Lindblad dissipator with the given rate.
LiouvilleGenerator build_redfield_generator(
    const PhotocellParams& params, bool secular,
    std::optional<double> dephasing = std::nullopt);

// Trace-one element of the generator's null space, reshaped to a density
// matrix. Throws NumericalError if the null space is degenerate.
Matrix5c steady_state_liouville(const LiouvilleGenerator& gen);

// Power at one trap-decay rate using the Redfield (nonsecular) steady state
// in the current/voltage formulas.
double redfield_power_at(const PhotocellParams& params, double gamma_alphabeta,
                         bool secular, std::optional<double> dephasing);

// Power maximized over gamma_alphabeta on the Redfield route.
OptimizationResult maximize_redfield_power(
    const PhotocellParams& params, bool secular,
    std::optional<double> dephasing);

struct RateRedfieldComparison {
  double rate_power;
  double redfield_power;
  double rate_enhancement;       // vs the matched independent benchmark
  double redfield_enhancement;
  double enhancement_difference;
};

// Runs the power-maximization pipeline on both routes and reports the
// enhancement discrepancy.
RateRedfieldComparison compare_with_rates(
    const PhotocellParams& params,
    std::optional<double> dephasing = std::nullopt, bool secular = false);

}  // namespace photocell
