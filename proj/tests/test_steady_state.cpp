#include <cmath>
#include <random>

#include "doctest.h"
#include "photocell/constants.hpp"
#include "photocell/steady_state.hpp"
#include "test_util.hpp"

using namespace photocell;

TEST_CASE("dark network thermalizes to a Boltzmann distribution") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    PhotocellParams p = testing::random_params(rng);
    p.gamma_1g = p.gamma_2g = 0.0;  // no sunlight
    const RateMatrix m = build_rate_matrix(p);
    const SteadyState s = solve_steady_state(m);

    const double beta = 1.0 / (kBoltzmann * p.t_cold);
    const std::array<double, 5> energy = {
        m.basis.eps_plus, m.basis.eps_minus, p.eps_alpha, p.eps_beta, 0.0};
    double zsum = 0.0;
    for (double e : energy) zsum += std::exp(-beta * e);
    for (int i = 0; i < 5; ++i)
      CHECK(s.populations(i) ==
            doctest::Approx(std::exp(-beta * energy[i]) / zsum)
                .epsilon(1e-9));
  }
}

TEST_CASE("detailed balance fixes every thermal population ratio") {
  std::mt19937 rng(42);
  PhotocellParams p = testing::random_params(rng);
  p.gamma_1g = p.gamma_2g = 0.0;
  const SteadyState s = solve_steady_state(build_rate_matrix(p));
  const double omega = p.eps_alpha - p.eps_beta;
  const double n = bose_occupation(omega, p.t_cold);
  CHECK(s.populations(kAlpha) / s.populations(kBeta) ==
        doctest::Approx(n / (n + 1.0)).epsilon(1e-9));
}

TEST_CASE("steady-state residual and normalization") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const RateMatrix m = build_rate_matrix(testing::random_params(rng));
    const SteadyState s = solve_steady_state(m);
    CHECK(s.populations.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.populations.minCoeff() >= -1e-12);
    const double residual = (m.q * s.populations).cwiseAbs().maxCoeff();
    CHECK(residual <= 1e-12 * std::max(m.q.cwiseAbs().maxCoeff(), 1e-300));
  }
}

TEST_CASE("ODE oracle confirms the linear solve") {
  // Rates are drawn from a narrow band so the fixed-step integrator reaches
  // the steady state in a bounded number of steps; the slowest mode is the
  // optical pumping at rate (gamma_1g + gamma_2g) N.
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> u(3e-3, 3e-2);
  for (int trial = 0; trial < 100; ++trial) {
    PhotocellParams p = testing::random_params(rng);
    p.gamma_2g = u(rng);
    p.gamma_1g = p.z * p.z * p.gamma_2g;
    p.gamma_11 = p.gamma_22 = u(rng);
    p.gamma_1alpha = u(rng);
    if (p.model == ModelKind::independent) p.gamma_2alpha = p.gamma_1alpha;
    p.gamma_alphabeta = u(rng);
    p.gamma_betag = u(rng);
    const RateMatrix m = build_rate_matrix(p);
    const SteadyState s = solve_steady_state(m);
    Populations p0 = Populations::Zero();
    p0(kGround) = 1.0;
    const double pump =
        p.optical_sum() * bose_occupation(m.basis.eps_minus, p.t_hot);
    const Populations relaxed = integrate_rate_ode(m, p0, 40.0 / pump);
    CHECK(relaxed.sum() == doctest::Approx(1.0).epsilon(1e-10));
    for (int i = 0; i < 5; ++i)
      CHECK(relaxed(i) ==
            doctest::Approx(s.populations(i)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("ODE integrator basics") {
  PhotocellParams p;
  p.model = ModelKind::asymmetric;
  SUBCASE("zero generator leaves the state unchanged") {
    p.gamma_1g = p.gamma_2g = p.gamma_11 = p.gamma_22 = 0.0;
    p.gamma_1alpha = p.gamma_alphabeta = p.gamma_betag = 0.0;
    p.chi = 0.0;
    const RateMatrix m = build_rate_matrix(p);
    Populations p0;
    p0 << 0.3, 0.1, 0.2, 0.15, 0.25;
    CHECK((integrate_rate_ode(m, p0, 5.0) - p0).cwiseAbs().maxCoeff() <
          1e-14);
  }
  SUBCASE("two-level decay matches the analytic exponential") {
    // Only the trap reset channel is active and the phonon occupation at
    // eps_beta is frozen out by a tiny temperature, leaving pure decay
    // beta -> g at rate gamma_betag.
    p.gamma_1g = p.gamma_2g = p.gamma_11 = p.gamma_22 = 0.0;
    p.gamma_1alpha = p.gamma_alphabeta = 0.0;
    p.chi = 0.0;
    p.gamma_betag = 1.0;
    p.t_cold = 1e-3;
    const RateMatrix m = build_rate_matrix(p);
    Populations p0 = Populations::Zero();
    p0(kBeta) = 1.0;
    const Populations out = integrate_rate_ode(m, p0, 20.0);
    CHECK(out(kBeta) == doctest::Approx(std::exp(-20.0)).epsilon(1e-6));
    CHECK(out(kGround) == doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-9));
  }
  SUBCASE("nonpositive horizon is rejected") {
    const RateMatrix m = build_rate_matrix(p);
    Populations p0 = Populations::Zero();
    p0(kGround) = 1.0;
    CHECK_THROWS_AS(integrate_rate_ode(m, p0, 0.0), InvalidParams);
  }
}

TEST_CASE("operating point arithmetic") {
  PhotocellParams p;
  p.eps_alpha = 1.8;
  p.eps_beta = 0.2;
  p.gamma_alphabeta = 1e-3;
  SteadyState s;
  s.populations << 0.2, 0.2, 0.1, 0.1, 0.4;
  const OperatingPoint op = operating_point(s, p);
  CHECK(op.voltage == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(op.current == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(op.power == op.current * op.voltage);
}

TEST_CASE("operating point rejects empty trap levels") {
  PhotocellParams p;
  SteadyState s;
  s.populations << 0.5, 0.5, 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(operating_point(s, p), NumericalError);
}

TEST_CASE("voltage vanishes without sunlight") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    PhotocellParams p = testing::random_params(rng);
    p.gamma_1g = p.gamma_2g = 0.0;
    const SteadyState s = solve_steady_state(build_rate_matrix(p));
    CHECK(std::abs(operating_point(s, p).voltage) < 1e-9);
  }
}
