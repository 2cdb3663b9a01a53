#pragma once

#include <stdexcept>
#include <string>

namespace photocell {

// Raised when parameters violate the model's validity constraints.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a linear solve or optimization cannot produce a valid result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ModelKind { independent, symmetric, asymmetric };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

// Full parameter set of the five-level photocell. Energies and rates in eV,
// temperatures in Kelvin, angles in radians. The ground state energy is the
// zero reference.
struct PhotocellParams {
  ModelKind model = ModelKind::asymmetric;

  double eps1 = 2.0;       // lower site excitation energy
  double eps2 = 2.1;       // upper site excitation energy
  double eps_alpha = 1.8;  // trap upper level
  double eps_beta = 0.2;   // trap lower level

  double j12_bare = 0.01;  // dipolar coupling at parallel dipoles, J12^0
  double phi = 0.0;        // inter-dipole angle; effective J12 = J12^0 cos(phi)
  double z = 1.0;          // dipole asymmetry, mu_1g = z mu_2g

  double gamma_1g = 0.62e-6;     // optical rate of site 1 (= z^2 gamma_2g)
  double gamma_2g = 0.62e-6;     // optical rate of site 2
  double gamma_11 = 0.005;       // local phonon rate, site 1
  double gamma_22 = 0.005;       // local phonon rate, site 2
  double gamma_1alpha = 6e-7;    // transfer rate molecule 1 -> trap
  double gamma_2alpha = 0.0;     // transfer rate molecule 2 -> trap
  double gamma_alphabeta = 1e-3; // trap decay (work extraction)
  double gamma_betag = 0.0248;   // trap reset
  double chi = 0.2;              // alpha -> g leakage fraction

  double theta_rc = 3.14159265358979323846;  // trap coupling phase (symmetric)

  double t_hot = 6000.0;  // photon bath
  double t_cold = 300.0;  // phonon baths

  double delta_eps() const { return eps2 - eps1; }
  double j12() const;  // effective coupling J12^0 cos(phi)
  double optical_sum() const { return gamma_1g + gamma_2g; }

  // Throws InvalidParams on any violated constraint.
  void validate() const;
};

}  // namespace photocell
