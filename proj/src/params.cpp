#include "photocell/params.hpp"

#include <cmath>

namespace photocell {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::independent: return "independent";
    case ModelKind::symmetric: return "symmetric";
    case ModelKind::asymmetric: return "asymmetric";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "independent") return ModelKind::independent;
  if (name == "symmetric") return ModelKind::symmetric;
  if (name == "asymmetric") return ModelKind::asymmetric;
  throw InvalidParams("unknown model kind: " + name);
}

double PhotocellParams::j12() const {
  return model == ModelKind::independent ? 0.0 : j12_bare * std::cos(phi);
}

void PhotocellParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidParams(what);
  };
  require(gamma_1g >= 0 && gamma_2g >= 0 && gamma_11 >= 0 && gamma_22 >= 0 &&
              gamma_1alpha >= 0 && gamma_2alpha >= 0 &&
              gamma_alphabeta >= 0 && gamma_betag >= 0,
          "all rates must be nonnegative");
  require(t_hot > 0 && t_cold > 0, "temperatures must be positive");
  require(z >= 0 && z <= 1, "z must lie in [0, 1]");
  require(chi >= 0, "chi must be nonnegative");
  require(eps1 <= eps2, "site energies must satisfy eps1 <= eps2");
  require(eps_alpha < eps1, "trap level must sit below the site energies");
  require(eps_beta < eps_alpha, "eps_beta must sit below eps_alpha");
  if (model == ModelKind::symmetric) {
    require(std::abs(eps2 - eps1) < 1e-12 && std::abs(z - 1.0) < 1e-12,
            "symmetric model requires eps1 = eps2 and z = 1");
  }
  if (model == ModelKind::asymmetric) {
    require(gamma_2alpha == 0.0,
            "asymmetric model requires gamma_2alpha = 0");
  }
}

}  // namespace photocell
