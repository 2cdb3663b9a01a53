#include "photocell/screening.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "photocell/constants.hpp"
#include "photocell/exciton.hpp"
#include "photocell/optimize.hpp"
#include "photocell/sweeps.hpp"

namespace photocell {

namespace {

bool parse_double(const std::string& field, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(field, &pos);
    return pos == field.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::vector<MoleculeRecord> load_molecule_db(std::istream& in,
                                             ParseReport& report) {
  std::string line;
  if (!std::getline(in, line))
    throw FormatError("molecule database is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (split_csv(line) != std::vector<std::string>{"id", "e_g", "mu_g", "e_e",
                                                  "mu_e"})
    throw FormatError("molecule database header must be id,e_g,mu_g,e_e,mu_e");

  std::vector<MoleculeRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    MoleculeRecord rec;
    const bool shaped =
        fields.size() == 5 && parse_double(fields[1], rec.e_g) &&
        parse_double(fields[2], rec.mu_g) && parse_double(fields[3], rec.e_e) &&
        parse_double(fields[4], rec.mu_e);
    if (!shaped) {
      ++report.skipped;
      report.messages.push_back("line " + std::to_string(line_no) +
                                ": malformed row");
      continue;
    }
    rec.id = fields[0];
    if (!(rec.e_g > 0.0 && rec.e_e > 0.0 && rec.mu_g >= 0.0 &&
          rec.mu_e >= 0.0)) {
      ++report.skipped;
      report.messages.push_back("line " + std::to_string(line_no) +
                                ": nonpositive energy or negative dipole");
      continue;
    }
    ++report.accepted;
    records.push_back(std::move(rec));
  }
  return records;
}

void write_molecule_db(std::ostream& out,
                       const std::vector<MoleculeRecord>& records) {
  out << "id,e_g,mu_g,e_e,mu_e\n";
  out.precision(17);
  for (const auto& rec : records)
    out << rec.id << ',' << rec.e_g << ',' << rec.mu_g << ',' << rec.e_e << ','
        << rec.mu_e << '\n';
}

double forster_coupling(double mu_donor, double mu_acceptor, double r_nm,
                        double kappa) {
  if (r_nm <= 0.0)
    throw InvalidParams("forster_coupling: separation must be positive");
  return kappa * kDipoleCoupling * mu_donor * mu_acceptor /
         (r_nm * r_nm * r_nm);
}

std::optional<DimerCandidate> score_pair(const MoleculeRecord& donor,
                                         const MoleculeRecord& acceptor,
                                         const ScreeningCriteria& criteria) {
  if (!(acceptor.e_g < donor.e_g)) return std::nullopt;
  if (!(acceptor.mu_g <= donor.mu_g)) return std::nullopt;

  DimerCandidate c;
  c.donor_id = donor.id;
  c.acceptor_id = acceptor.id;
  c.donor_e_g = donor.e_g;
  c.donor_mu_g = donor.mu_g;
  c.donor_e_e = donor.e_e;
  c.donor_mu_e = donor.mu_e;
  c.acceptor_e_g = acceptor.e_g;
  c.acceptor_mu_g = acceptor.mu_g;
  c.acceptor_e_e = acceptor.e_e;
  c.acceptor_mu_e = acceptor.mu_e;

  c.z_g = donor.mu_g > 0.0 ? acceptor.mu_g / donor.mu_g : 0.0;
  c.j_g = forster_coupling(donor.mu_g, acceptor.mu_g, criteria.separation_nm,
                           criteria.kappa);
  c.tan2_g = darkness_angle(donor.e_g - acceptor.e_g, c.z_g, c.j_g, 0.0);

  c.z_e = donor.mu_e > 0.0 ? acceptor.mu_e / donor.mu_e : 0.0;
  c.j_e = forster_coupling(donor.mu_e, acceptor.mu_e, criteria.separation_nm,
                           criteria.kappa);
  c.excited_order_flipped = !(acceptor.e_e < donor.e_e);
  // Flipped pairs are scored anyway; the darkness value then reflects the
  // inverted ordering and typically fails the threshold downstream.
  c.tan2_e = darkness_angle(donor.e_e - acceptor.e_e, std::min(c.z_e, 1.0),
                            c.j_e, 0.0);
  return c;
}

namespace {

bool donor_passes(const MoleculeRecord& m, const ScreeningCriteria& c) {
  return m.mu_g >= c.donor_dipole_min && m.e_g >= c.donor_energy_min &&
         m.e_g <= c.donor_energy_max;
}

bool candidate_passes(const DimerCandidate& cand, const ScreeningCriteria& c) {
  return cand.z_g <= c.z_max && cand.tan2_g >= 0.0 &&
         cand.tan2_g <= c.tan2_max && cand.tan2_e >= 0.0 &&
         cand.tan2_e <= c.tan2_max && !cand.excited_order_flipped;
}

bool candidate_before(const DimerCandidate& a, const DimerCandidate& b) {
  const double wa = std::max(a.tan2_g, a.tan2_e);
  const double wb = std::max(b.tan2_g, b.tan2_e);
  if (wa != wb) return wa < wb;
  if (a.j_g != b.j_g) return a.j_g > b.j_g;
  if (a.donor_id != b.donor_id) return a.donor_id < b.donor_id;
  return a.acceptor_id < b.acceptor_id;
}

}  // namespace

std::vector<DimerCandidate> screen(const std::vector<MoleculeRecord>& records,
                                   const ScreeningCriteria& criteria,
                                   bool parallel) {
  std::vector<const MoleculeRecord*> donors;
  for (const auto& rec : records)
    if (donor_passes(rec, criteria)) donors.push_back(&rec);

  const int nd = static_cast<int>(donors.size());
  const int nr = static_cast<int>(records.size());
  std::vector<std::vector<DimerCandidate>> per_donor(nd);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < nd; ++i) {
    for (int j = 0; j < nr; ++j) {
      if (&records[j] == donors[i]) continue;
      const auto cand = score_pair(*donors[i], records[j], criteria);
      if (cand && candidate_passes(*cand, criteria))
        per_donor[i].push_back(*cand);
    }
  }

  std::vector<DimerCandidate> all;
  for (auto& chunk : per_donor)
    all.insert(all.end(), chunk.begin(), chunk.end());
  std::stable_sort(all.begin(), all.end(), candidate_before);
  return all;
}

std::vector<std::size_t> partner_histogram(
    const std::vector<MoleculeRecord>& records, const MoleculeRecord& anchor,
    PartnerRole role, const std::vector<double>& bin_edges,
    const ScreeningCriteria& criteria) {
  if (bin_edges.size() < 2 ||
      !std::is_sorted(bin_edges.begin(), bin_edges.end()))
    throw InvalidParams("partner_histogram: bin edges must be ascending");

  std::vector<std::size_t> counts(bin_edges.size() - 1, 0);
  for (const auto& rec : records) {
    if (rec.id == anchor.id) continue;
    const auto cand = role == PartnerRole::acceptor
                          ? score_pair(anchor, rec, criteria)
                          : score_pair(rec, anchor, criteria);
    if (!cand || cand->excited_order_flipped) continue;
    const double value = std::max(cand->tan2_g, cand->tan2_e);
    const auto it =
        std::upper_bound(bin_edges.begin(), bin_edges.end(), value);
    if (it == bin_edges.begin() || it == bin_edges.end()) continue;
    ++counts[static_cast<std::size_t>(it - bin_edges.begin()) - 1];
  }
  return counts;
}

double evaluate_enhancement(const DimerCandidate& candidate,
                            const PhotocellParams& defaults) {
  const double delta_eps = candidate.donor_e_g - candidate.acceptor_e_g;
  PhotocellParams model = configure_coupled_model(
      defaults, ModelKind::asymmetric, delta_eps, candidate.j_g,
      candidate.z_g, candidate.acceptor_e_g);
  // Keep the trap offset below the lower exciton fixed while re-anchoring
  // eps_minus to the acceptor transition energy.
  const double offset =
      diagonalize_dimer(defaults).eps_minus - defaults.eps_alpha;
  model.eps_alpha = candidate.acceptor_e_g - offset;
  return enhancement_ratio(model, benchmark_of(model));
}

}  // namespace photocell
