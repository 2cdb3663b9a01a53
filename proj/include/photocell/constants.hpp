#pragma once

namespace photocell {

// Boltzmann constant in eV/K. All energies and rates are in eV (hbar = 1).
inline constexpr double kBoltzmann = 8.617333262e-5;

// Point-dipole coupling constant in eV nm^3 per squared atomic unit of
// transition dipole: e^2/(4 pi eps0) * a0^2 = 14.3996 eV A * (0.529177 A)^2.
inline constexpr double kDipoleCoupling = 14.3996 * 0.529177 * 0.529177 * 1e-3;

}  // namespace photocell
