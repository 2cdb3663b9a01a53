#include <cmath>
#include <sstream>

#include "doctest.h"
#include "photocell/config.hpp"
#include "photocell/exciton.hpp"

using namespace photocell;

TEST_CASE("published parameter presets") {
  SUBCASE("trapping-sweep preset") {
    const RunConfig cfg = preset_config("fig3");
    const PhotocellParams& p = cfg.params;
    CHECK(p.model == ModelKind::asymmetric);
    CHECK(p.optical_sum() == doctest::Approx(1.24e-6).epsilon(1e-12));
    CHECK(p.gamma_11 == 0.005);
    CHECK(p.gamma_22 == 0.005);
    CHECK(p.gamma_betag == 0.0248);
    CHECK(p.t_hot == 6000.0);
    CHECK(p.t_cold == 300.0);
    CHECK(p.eps_alpha == 1.8);
    CHECK(p.eps_beta == 0.2);
    CHECK(p.chi == 0.2);
    CHECK(cfg.eps_minus == 2.0);
    CHECK(diagonalize_dimer(p).eps_minus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.gamma_1g ==
          doctest::Approx(p.z * p.z * p.gamma_2g).epsilon(1e-12));
  }
  SUBCASE("surface preset fixes the trapping rate") {
    const RunConfig cfg = preset_config("fig4");
    CHECK(cfg.params.gamma_1alpha == 6e-7);
    CHECK(cfg.j12_cap == 0.03);
  }
  SUBCASE("deviation preset") {
    const RunConfig cfg = preset_config("fig5");
    CHECK(cfg.params.optical_sum() == doctest::Approx(1.2e-6).epsilon(1e-12));
    CHECK(cfg.grid_min == -0.03);
    CHECK(cfg.grid_max == 0.03);
  }
  SUBCASE("phase-sweep preset is symmetric") {
    const RunConfig cfg = preset_config("fig8");
    CHECK(cfg.params.model == ModelKind::symmetric);
    CHECK(cfg.params.z == 1.0);
    CHECK(cfg.params.delta_eps() == 0.0);
  }
  SUBCASE("unknown preset is rejected") {
    CHECK_THROWS_AS(preset_config("fig9"), ConfigError);
  }
}

TEST_CASE("config text parsing") {
  SUBCASE("empty text keeps the preset") {
    std::istringstream in("# nothing but a comment\n\n");
    const RunConfig cfg = parse_config(in, "fig3");
    const RunConfig ref = preset_config("fig3");
    CHECK(cfg.params.gamma_2g == ref.params.gamma_2g);
    CHECK(cfg.params.eps1 == ref.params.eps1);
  }
  SUBCASE("override merges over the preset") {
    std::istringstream in("j12 = 0.01\n");
    const RunConfig cfg = parse_config(in, "fig4");
    const RunConfig ref = preset_config("fig4");
    CHECK(cfg.params.j12_bare == 0.01);
    CHECK(cfg.params.gamma_betag == ref.params.gamma_betag);
    CHECK(cfg.params.eps_alpha == ref.params.eps_alpha);
  }
  SUBCASE("negative leakage is rejected") {
    std::istringstream in("chi = -1\n");
    CHECK_THROWS_AS(parse_config(in, "fig3"), ConfigError);
  }
  SUBCASE("unknown keys are rejected") {
    std::istringstream in("gamma_x = 1\n");
    CHECK_THROWS_AS(parse_config(in, "fig3"), ConfigError);
  }
  SUBCASE("duplicate keys are rejected") {
    std::istringstream in("chi = 0.1\nchi = 0.2\n");
    CHECK_THROWS_AS(parse_config(in, "fig3"), ConfigError);
  }
  SUBCASE("unparsable numbers are rejected") {
    std::istringstream in("chi = zero\n");
    CHECK_THROWS_AS(parse_config(in, "fig3"), ConfigError);
  }
  SUBCASE("missing separator is rejected") {
    std::istringstream in("chi 0.2\n");
    CHECK_THROWS_AS(parse_config(in, "fig3"), ConfigError);
  }
  SUBCASE("model constraints are enforced") {
    std::istringstream in("model = symmetric\ndelta_eps = 0.1\n");
    CHECK_THROWS_AS(parse_config(in, "fig8"), ConfigError);
  }
  SUBCASE("asymmetric z follows the dark-state relation by default") {
    std::istringstream in("delta_eps = 0.1\nj12 = 0.0416667\n");
    const RunConfig cfg = parse_config(in, "fig3");
    CHECK(cfg.params.z == doctest::Approx(0.2).epsilon(1e-4));
  }
}

TEST_CASE("every preset round-trips through its text form") {
  for (const char* name : {"fig3", "fig4", "fig5", "fig8", "ivpv"}) {
    CAPTURE(name);
    const RunConfig cfg = preset_config(name);
    std::stringstream buf;
    write_config(buf, cfg);
    const RunConfig back = parse_config(buf, name);
    CHECK(back.params.model == cfg.params.model);
    CHECK(back.params.eps1 == doctest::Approx(cfg.params.eps1).epsilon(1e-15));
    CHECK(back.params.eps2 == doctest::Approx(cfg.params.eps2).epsilon(1e-15));
    CHECK(back.params.z == doctest::Approx(cfg.params.z).epsilon(1e-15));
    CHECK(back.params.gamma_1g ==
          doctest::Approx(cfg.params.gamma_1g).epsilon(1e-15));
    CHECK(back.params.gamma_2g ==
          doctest::Approx(cfg.params.gamma_2g).epsilon(1e-15));
    CHECK(back.params.gamma_alphabeta == cfg.params.gamma_alphabeta);
    CHECK(back.params.theta_rc == cfg.params.theta_rc);
    CHECK(back.j12_cap == cfg.j12_cap);
    CHECK(back.grid_min == cfg.grid_min);
    CHECK(back.grid_max == cfg.grid_max);
    CHECK(back.grid_points == cfg.grid_points);
    CHECK(back.deps_points == cfg.deps_points);
    CHECK(back.j12_points == cfg.j12_points);
  }
}
