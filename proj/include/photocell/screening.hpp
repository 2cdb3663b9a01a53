#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "photocell/params.hpp"

namespace photocell {

// One database row: S0 (ground geometry) and S1 (excited geometry) transition
// energy [eV] and transition dipole [atomic units].
struct MoleculeRecord {
  std::string id;
  double e_g = 0.0;
  double mu_g = 0.0;
  double e_e = 0.0;
  double mu_e = 0.0;
};

struct ParseReport {
  std::size_t accepted = 0;
  std::size_t skipped = 0;
  std::vector<std::string> messages;
};

struct ScreeningCriteria {
  double donor_dipole_min = 3.0;     // a.u.
  double donor_energy_min = 2.5;     // eV
  double donor_energy_max = 3.5;     // eV
  double z_max = 0.4;
  double tan2_max = 0.05;            // both geometries
  double separation_nm = 1.0;
  double kappa = 1.0;                // orientation factor
};

struct DimerCandidate {
  std::string donor_id;
  std::string acceptor_id;
  double donor_e_g, donor_mu_g, donor_e_e, donor_mu_e;
  double acceptor_e_g, acceptor_mu_g, acceptor_e_e, acceptor_mu_e;
  double z_g, z_e;
  double j_g, j_e;        // eV
  double tan2_g, tan2_e;
  bool excited_order_flipped = false;  // acceptor S1 energy above donor S1
  std::optional<double> q;             // enhancement over the benchmark
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV with header id,e_g,mu_g,e_e,mu_e. Malformed rows are skipped and
// counted. Throws FormatError on a missing/incorrect header or empty stream.
std::vector<MoleculeRecord> load_molecule_db(std::istream& in,
                                             ParseReport& report);

void write_molecule_db(std::ostream& out,
                       const std::vector<MoleculeRecord>& records);

// Point-dipole coupling kappa * C * mu1 * mu2 / r^3 in eV (dipoles in a.u.,
// r in nm). Throws on r <= 0.
double forster_coupling(double mu_donor, double mu_acceptor, double r_nm,
                        double kappa);

// Scores one (donor, acceptor) pair; nullopt when the ground-geometry energy
// ordering is violated (acceptor must sit below the donor).
std::optional<DimerCandidate> score_pair(const MoleculeRecord& donor,
                                         const MoleculeRecord& acceptor,
                                         const ScreeningCriteria& criteria);

// All-pairs screen: filters donors by dipole/energy windows, scores every
// valid acceptor, keeps candidates passing z and darkness thresholds, sorts
// ascending by max(tan2_g, tan2_e), ties by larger J then ids.
std::vector<DimerCandidate> screen(const std::vector<MoleculeRecord>& records,
                                   const ScreeningCriteria& criteria,
                                   bool parallel = true);

enum class PartnerRole { donor, acceptor };

// Counts valid partners of a fixed anchor per tan^2(Phi) bin. `role` is the
// role of the *partners* being counted.
std::vector<std::size_t> partner_histogram(
    const std::vector<MoleculeRecord>& records, const MoleculeRecord& anchor,
    PartnerRole role, const std::vector<double>& bin_edges,
    const ScreeningCriteria& criteria);

// Photocell enhancement of a candidate: asymmetric model with the candidate's
// ground-geometry z, J and detuning, eps_minus anchored to the acceptor's
// ground transition energy, trap and bath rates from `defaults`.
double evaluate_enhancement(const DimerCandidate& candidate,
                            const PhotocellParams& defaults);

}  // namespace photocell
