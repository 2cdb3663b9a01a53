#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "photocell/config.hpp"
#include "photocell/csv.hpp"
#include "photocell/rate_matrix.hpp"
#include "photocell/redfield.hpp"
#include "photocell/screening.hpp"
#include "photocell/sweeps.hpp"

namespace {

using namespace photocell;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CliOptions {
  std::string command;
  std::string config_path;
  std::string preset = "fig3";
  std::string out_path = "out.csv";
  std::string db_path;
  std::string anchor_id;
  std::string role = "acceptor";
  double dephase = -1.0;  // eV; < 0 means 0.1 * gamma_11
  bool secular = false;
  bool serial = false;
  bool with_q = false;
};

RunConfig load_config(const CliOptions& opt) {
  if (opt.config_path.empty()) return preset_config(opt.preset);
  std::ifstream in(opt.config_path);
  if (!in) throw ConfigError("cannot open config file: " + opt.config_path);
  return parse_config(in, opt.preset);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
}

std::vector<double> axis_grid(const RunConfig& cfg, bool log_scale) {
  if (cfg.grid_points < 2)
    throw ConfigError("this command needs grid_min/grid_max/grid_points");
  return log_scale ? log_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points)
                   : linear_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points);
}

int run_iv(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (cfg.grid_points < 2) {
    cfg.grid_min = 1e-12;
    cfg.grid_max = 1.0;
    cfg.grid_points = 200;
  }
  const auto curve = iv_curve(cfg.params, axis_grid(cfg, true));
  std::ostringstream csv;
  csv << "gamma_alphabeta,current,voltage,power\n";
  double best_power = 0.0, best_v = 0.0;
  for (const auto& [g, op] : curve) {
    csv << csv_number(g) << ',' << csv_number(op.current) << ','
        << csv_number(op.voltage) << ',' << csv_number(op.power) << '\n';
    if (op.power > best_power) {
      best_power = op.power;
      best_v = op.voltage;
    }
  }
  write_file(opt.out_path, csv.str());
  std::cout << "iv: " << curve.size() << " points, peak power " << best_power
            << " at V = " << best_v << "\n";
  return 0;
}

int run_optimize(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const OptimizationResult model = maximize_power(cfg.params);
  const OptimizationResult bench =
      maximize_power(benchmark_of(cfg.params));
  const double enh = bench.best_point.power > 0.0
                         ? model.best_point.power / bench.best_point.power
                         : 0.0;
  std::ostringstream csv;
  csv << "best_gamma_alphabeta,current,voltage,power,benchmark_power,"
         "enhancement\n";
  csv << csv_number(model.best_gamma_alphabeta) << ','
      << csv_number(model.best_point.current) << ','
      << csv_number(model.best_point.voltage) << ','
      << csv_number(model.best_point.power) << ','
      << csv_number(bench.best_point.power) << ',' << csv_number(enh) << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "optimize: P = " << model.best_point.power
            << " at gamma_alphabeta = " << model.best_gamma_alphabeta
            << ", enhancement " << enh << "\n";
  return 0;
}

int run_sweep_trapping(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (cfg.grid_points < 2) {
    cfg.grid_min = 1e-10;
    cfg.grid_max = 1e-3;
    cfg.grid_points = 15;
  }
  const SweepResult sweep = sweep_trapping(
      cfg.params, axis_grid(cfg, true), cfg.j12_cap, cfg.eps_minus,
      opt.serial ? Execution::serial : Execution::parallel);
  std::ostringstream csv;
  csv << "gamma_1alpha,model_power,benchmark_power,enhancement,best_j12,"
         "best_gamma_alphabeta\n";
  for (const auto& pt : sweep.points)
    csv << csv_number(pt.axis1) << ',' << csv_number(pt.model_power) << ','
        << csv_number(pt.benchmark_power) << ',' << csv_number(pt.enhancement)
        << ',' << csv_number(pt.best_j12) << ','
        << csv_number(pt.best_gamma_alphabeta) << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "sweep-trapping: " << sweep.points.size()
            << " points, enhancement " << sweep.points.front().enhancement
            << " .. " << sweep.points.back().enhancement << "\n";
  return 0;
}

int run_surface(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const SweepResult sweep = enhancement_surface(
      cfg.params, linear_grid(cfg.deps_min, cfg.deps_max, cfg.deps_points),
      linear_grid(cfg.j12_min, cfg.j12_max, cfg.j12_points), cfg.eps_minus,
      opt.serial ? Execution::serial : Execution::parallel);
  std::ostringstream csv;
  csv << "delta_eps,j12,model_power,benchmark_power,enhancement,"
         "symmetric_enhancement,tan2_phi,best_gamma_alphabeta\n";
  double best = 0.0;
  for (const auto& pt : sweep.points) {
    csv << csv_number(pt.axis1) << ',' << csv_number(pt.axis2) << ','
        << csv_number(pt.model_power) << ',' << csv_number(pt.benchmark_power)
        << ',' << csv_number(pt.enhancement) << ',' << csv_number(pt.reference)
        << ',' << csv_number(pt.tan2_phi) << ','
        << csv_number(pt.best_gamma_alphabeta) << '\n';
    best = std::max(best, pt.enhancement);
  }
  write_file(opt.out_path, csv.str());
  std::cout << "surface: " << sweep.points.size()
            << " points, peak asymmetric enhancement " << best << "\n";
  return 0;
}

int run_deviation(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (cfg.grid_points < 2) {
    cfg.grid_min = -0.03;
    cfg.grid_max = 0.03;
    cfg.grid_points = 25;
  }
  const SweepResult sweep = deviation_sweep(
      cfg.params, axis_grid(cfg, false), cfg.eps_minus,
      opt.serial ? Execution::serial : Execution::parallel);
  std::ostringstream csv;
  csv << "delta,asym_power,benchmark_power,asym_enhancement,sym_enhancement,"
         "asym_tan2,sym_tan2\n";
  for (const auto& pt : sweep.points)
    csv << csv_number(pt.axis1) << ',' << csv_number(pt.model_power) << ','
        << csv_number(pt.benchmark_power) << ',' << csv_number(pt.enhancement)
        << ',' << csv_number(pt.reference) << ',' << csv_number(pt.tan2_phi)
        << ',' << csv_number(pt.reference_tan2) << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "deviation: " << sweep.points.size() << " points\n";
  return 0;
}

int run_theta_rc(const CliOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (cfg.grid_points < 2) {
    cfg.grid_min = 0.5 * 3.14159265358979323846;
    cfg.grid_max = 1.5 * 3.14159265358979323846;
    cfg.grid_points = 25;
  }
  const SweepResult sweep = theta_rc_sweep(
      cfg.params, axis_grid(cfg, false), cfg.eps_minus,
      opt.serial ? Execution::serial : Execution::parallel);
  std::ostringstream csv;
  csv << "theta_rc,model_power,benchmark_power,enhancement,"
         "best_gamma_alphabeta\n";
  for (const auto& pt : sweep.points)
    csv << csv_number(pt.axis1) << ',' << csv_number(pt.model_power) << ','
        << csv_number(pt.benchmark_power) << ',' << csv_number(pt.enhancement)
        << ',' << csv_number(pt.best_gamma_alphabeta) << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "theta-rc: " << sweep.points.size() << " points\n";
  return 0;
}

int run_redfield_compare(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  std::vector<double> grid;
  if (cfg.grid_points >= 2)
    grid = log_grid(cfg.grid_min, cfg.grid_max, cfg.grid_points);
  else
    grid = {cfg.params.gamma_1alpha};
  const std::optional<double> dephasing =
      opt.dephase > 0.0 ? std::optional<double>(opt.dephase) : std::nullopt;

  std::ostringstream csv;
  csv << "gamma_1alpha,rate_enhancement,redfield_enhancement,difference\n";
  double max_diff = 0.0;
  for (double g : grid) {
    PhotocellParams p = cfg.params;
    p.gamma_1alpha = g;
    const RateRedfieldComparison cmp =
        compare_with_rates(p, dephasing, opt.secular);
    csv << csv_number(g) << ',' << csv_number(cmp.rate_enhancement) << ','
        << csv_number(cmp.redfield_enhancement) << ','
        << csv_number(cmp.enhancement_difference) << '\n';
    max_diff = std::max(max_diff, std::abs(cmp.enhancement_difference));
  }
  write_file(opt.out_path, csv.str());
  std::cout << "redfield-compare: " << grid.size()
            << " points, max |difference| " << max_diff << "\n";
  return 0;
}

int run_dephasing(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  const double gamma_d =
      opt.dephase > 0.0 ? opt.dephase : 0.1 * cfg.params.gamma_11;
  const RateRedfieldComparison plain = compare_with_rates(cfg.params);
  const RateRedfieldComparison dephased =
      compare_with_rates(cfg.params, gamma_d);
  const double reduction = 1.0 - dephased.redfield_enhancement /
                                     plain.redfield_enhancement;
  std::ostringstream csv;
  csv << "gamma_dephase,enhancement_nodephase,enhancement_dephase,"
         "relative_reduction\n";
  csv << csv_number(gamma_d) << ','
      << csv_number(plain.redfield_enhancement) << ','
      << csv_number(dephased.redfield_enhancement) << ','
      << csv_number(reduction) << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "dephasing: enhancement " << plain.redfield_enhancement
            << " -> " << dephased.redfield_enhancement << " (reduction "
            << reduction * 100.0 << "%)\n";
  return 0;
}

std::vector<MoleculeRecord> load_db(const CliOptions& opt,
                                    ParseReport& report) {
  if (opt.db_path.empty())
    throw ConfigError("this command requires --db <path>");
  std::ifstream in(opt.db_path);
  if (!in) throw ConfigError("cannot open database: " + opt.db_path);
  return load_molecule_db(in, report);
}

std::string candidate_csv_header() {
  return "donor_id,acceptor_id,E2g,mu2g,E2e,mu2e,E1g,mu1g,E1e,mu1e,"
         "z_g,z_e,J_g,J_e,tan2_g,tan2_e,Q\n";
}

void append_candidate(std::ostringstream& csv, const DimerCandidate& c) {
  csv << c.donor_id << ',' << c.acceptor_id << ',' << csv_number(c.donor_e_g)
      << ',' << csv_number(c.donor_mu_g) << ',' << csv_number(c.donor_e_e)
      << ',' << csv_number(c.donor_mu_e) << ',' << csv_number(c.acceptor_e_g)
      << ',' << csv_number(c.acceptor_mu_g) << ','
      << csv_number(c.acceptor_e_e) << ',' << csv_number(c.acceptor_mu_e)
      << ',' << csv_number(c.z_g) << ',' << csv_number(c.z_e) << ','
      << csv_number(c.j_g) << ',' << csv_number(c.j_e) << ','
      << csv_number(c.tan2_g) << ',' << csv_number(c.tan2_e) << ','
      << (c.q ? csv_number(*c.q) : std::string()) << '\n';
}

int run_screen(const CliOptions& opt) {
  const RunConfig cfg = load_config(opt);
  ParseReport report;
  const auto records = load_db(opt, report);
  ScreeningCriteria criteria;
  auto candidates = screen(records, criteria, !opt.serial);
  if (opt.with_q)
    for (auto& cand : candidates)
      cand.q = evaluate_enhancement(cand, cfg.params);

  std::ostringstream csv;
  csv << candidate_csv_header();
  for (const auto& cand : candidates) append_candidate(csv, cand);
  write_file(opt.out_path, csv.str());
  std::cout << "screen: " << records.size() << " molecules ("
            << report.skipped << " rows skipped), " << candidates.size()
            << " candidate pairs\n";
  return 0;
}

int run_histogram(const CliOptions& opt) {
  load_config(opt);  // validates config/preset flags
  ParseReport report;
  const auto records = load_db(opt, report);
  const auto anchor =
      std::find_if(records.begin(), records.end(),
                   [&](const MoleculeRecord& m) { return m.id == opt.anchor_id; });
  if (anchor == records.end())
    throw ConfigError("anchor molecule not found: " + opt.anchor_id);
  const PartnerRole role = opt.role == "donor" ? PartnerRole::donor
                                               : PartnerRole::acceptor;
  ScreeningCriteria criteria;
  criteria.tan2_max = 1.0;  // histogram spans the full darkness range
  const auto edges = linear_grid(0.0, 0.5, 26);
  const auto counts =
      partner_histogram(records, *anchor, role, edges, criteria);

  std::ostringstream csv;
  csv << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i)
    csv << csv_number(edges[i]) << ',' << csv_number(edges[i + 1]) << ','
        << counts[i] << '\n';
  write_file(opt.out_path, csv.str());
  std::cout << "histogram: anchor " << opt.anchor_id << ", "
            << std::accumulate(counts.begin(), counts.end(), std::size_t{0})
            << " partners binned\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dark-state photocell simulator and dimer screening toolkit"};
  app.require_subcommand(1);

  CliOptions opt;
  const std::vector<std::string> commands = {
      "iv",          "optimize",  "sweep-trapping",   "surface",
      "deviation",   "theta-rc",  "redfield-compare", "dephasing",
      "screen",      "histogram"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", opt.config_path, "key = value config file");
    sub->add_option("--preset", opt.preset,
                    "parameter preset (fig3, fig4, fig5, fig8, ivpv)");
    sub->add_option("--out", opt.out_path, "output CSV path");
    sub->add_flag("--serial", opt.serial, "disable sweep parallelism");
    if (name == "screen" || name == "histogram")
      sub->add_option("--db", opt.db_path, "molecule database CSV");
    if (name == "screen")
      sub->add_flag("--with-q", opt.with_q,
                    "evaluate the enhancement Q for every candidate");
    if (name == "histogram") {
      sub->add_option("--anchor", opt.anchor_id, "anchor molecule id")
          ->required();
      sub->add_option("--role", opt.role,
                      "role of the counted partners (donor|acceptor)");
    }
    if (name == "redfield-compare")
      sub->add_flag("--secular,!--nonsecular", opt.secular,
                    "generator variant (default nonsecular)");
    if (name == "redfield-compare" || name == "dephasing")
      sub->add_option("--dephase", opt.dephase, "pure dephasing rate, eV");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    if (opt.command == "iv") return run_iv(opt);
    if (opt.command == "optimize") return run_optimize(opt);
    if (opt.command == "sweep-trapping") return run_sweep_trapping(opt);
    if (opt.command == "surface") return run_surface(opt);
    if (opt.command == "deviation") return run_deviation(opt);
    if (opt.command == "theta-rc") return run_theta_rc(opt);
    if (opt.command == "redfield-compare") return run_redfield_compare(opt);
    if (opt.command == "dephasing") return run_dephasing(opt);
    if (opt.command == "screen") return run_screen(opt);
    if (opt.command == "histogram") return run_histogram(opt);
    std::cerr << "unknown command: " << opt.command << "\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidParams& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
