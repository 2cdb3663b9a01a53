#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "photocell/constants.hpp"
#include "photocell/exciton.hpp"

using namespace photocell;

namespace {

PhotocellParams dimer(double eps1, double eps2, double j12, double phi = 0.0) {
  PhotocellParams p;
  p.model = ModelKind::asymmetric;
  p.eps1 = eps1;
  p.eps2 = eps2;
  p.j12_bare = j12;
  p.phi = phi;
  return p;
}

}  // namespace

TEST_CASE("degenerate symmetric dimer splits by the coupling") {
  const ExcitonBasis b = diagonalize_dimer(dimer(2.0, 2.0, 0.02));
  CHECK(b.eps_plus == doctest::Approx(2.01).epsilon(1e-12));
  CHECK(b.eps_minus == doctest::Approx(1.99).epsilon(1e-12));
  CHECK(std::abs(b.ovl_p1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(b.ovl_p2) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(b.ovl_m1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(b.ovl_m2) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("uncoupled dimer keeps the site basis") {
  const ExcitonBasis b = diagonalize_dimer(dimer(2.0, 2.1, 0.0));
  CHECK(b.omega_r == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(b.eps_plus == doctest::Approx(2.1));
  CHECK(b.eps_minus == doctest::Approx(2.0));
  CHECK(std::abs(b.ovl_p2) == doctest::Approx(1.0));
  CHECK(std::abs(b.ovl_m1) == doctest::Approx(1.0));
}

TEST_CASE("detuned coupled dimer matches the closed-form splitting") {
  const ExcitonBasis b = diagonalize_dimer(dimer(2.0, 2.1, 0.02));
  const double omega = std::sqrt(0.01 + 0.0004);
  CHECK(b.omega_r == doctest::Approx(omega).epsilon(1e-12));
  CHECK(b.eps_plus == doctest::Approx(2.05 + omega / 2).epsilon(1e-12));
  CHECK(b.eps_minus == doctest::Approx(2.05 - omega / 2).epsilon(1e-12));
}

TEST_CASE("diagonalization agrees with a dense eigensolver") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double eps1 = 1.0 + u(rng);
    const double eps2 = eps1 + u(rng);
    const double j12 = 0.5 * u(rng);
    const ExcitonBasis b = diagonalize_dimer(dimer(eps1, eps2, j12));

    Eigen::Matrix2d h;
    h << eps1, j12 / 2, j12 / 2, eps2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    CHECK(b.eps_minus == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-12));
    CHECK(b.eps_plus == doctest::Approx(es.eigenvalues()(1)).epsilon(1e-12));

    Eigen::Vector2d vp = es.eigenvectors().col(1);
    if (vp(1) < 0) vp = -vp;
    CHECK(b.ovl_p1 == doctest::Approx(vp(0)).epsilon(1e-10));
    CHECK(b.ovl_p2 == doctest::Approx(vp(1)).epsilon(1e-10));

    // Orthonormality of the stored overlaps.
    CHECK(b.ovl_p1 * b.ovl_m1 + b.ovl_p2 * b.ovl_m2 ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.ovl_m1 * b.ovl_m1 + b.ovl_m2 * b.ovl_m2 ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("photon occupation values") {
  CHECK(bose_occupation(2.0, 6000.0) == doctest::Approx(0.0213).epsilon(0.01));
  CHECK(bose_occupation(2.0, 1e-6) == doctest::Approx(0.0));
  // Direct arithmetic: 1/(exp(0.1 / (kB * 300)) - 1).
  const double expected =
      1.0 / std::expm1(0.1 / (kBoltzmann * 300.0));
  CHECK(bose_occupation(0.1, 300.0) == doctest::Approx(expected));
  CHECK(bose_occupation(0.1, 300.0) == doctest::Approx(0.02134).epsilon(2e-3));
  CHECK(bose_occupation(0.0, 300.0) == 0.0);
  CHECK_THROWS_AS(bose_occupation(-0.1, 300.0), InvalidParams);
}

TEST_CASE("darkness angle reproduces the published dimer value") {
  CHECK(darkness_angle(0.12, 0.2655, 0.013, 0.0) ==
        doctest::Approx(0.044).epsilon(0.025));
}

TEST_CASE("symmetric dimer is fully dark") {
  CHECK(darkness_angle(0.0, 1.0, 0.02, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("darkness vanishes at the dark-state coupling") {
  const double j12 = dark_state_coupling(0.2, 0.1);
  CHECK(j12 == doctest::Approx(0.0416667).epsilon(1e-5));
  CHECK(darkness_angle(0.1, 0.2, j12, 0.0) < 1e-12);

  // Cross-check: the dark exciton's optical rate vanishes too.
  PhotocellParams p = dimer(2.0, 2.1, j12);
  p.z = 0.2;
  const ExcitonBasis b = diagonalize_dimer(p);
  const OpticalRates r = exciton_optical_rates(b, 0.2, 1e-6);
  CHECK(r.gamma_minus_g / (r.gamma_plus_g + r.gamma_minus_g) < 1e-12);
}

TEST_CASE("darkness angle edge cases") {
  CHECK(dark_state_coupling(1e-9, 0.5) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(dark_state_coupling(1.0, 0.1), NumericalError);
  CHECK_THROWS_AS(darkness_angle(0.0, 0.5, 0.0, 0.0), NumericalError);
  // Uncoupled symmetric dimer: bright and dark rates equal.
  CHECK(darkness_angle(0.1, 1.0, 0.0, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("dark coupling closure over random draws") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> uz(0.05, 0.95);
  std::uniform_real_distribution<double> ud(0.01, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double z = uz(rng);
    const double delta = ud(rng);
    const double j12 = dark_state_coupling(z, delta);
    CHECK(darkness_angle(delta, z, j12, 0.0) < 1e-12);
  }
}

TEST_CASE("darkness angle stays within [0, 1] for aligned dipoles") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double t = darkness_angle(u(rng), u(rng), 0.05 * u(rng),
                                    (u(rng) - 0.5) * 3.141592653589793);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0 + 1e-12);
  }
}

TEST_CASE("optical rate sum rule") {
  SUBCASE("symmetric dimer concentrates all brightness in |+>") {
    const ExcitonBasis b = diagonalize_dimer(dimer(2.0, 2.0, 0.02));
    const OpticalRates r = exciton_optical_rates(b, 1.0, 1e-6);
    CHECK(r.gamma_plus_g == doctest::Approx(2e-6).epsilon(1e-12));
    CHECK(r.gamma_minus_g == doctest::Approx(0.0).epsilon(1e-18));
  }
  SUBCASE("single absorber at z = 0") {
    const ExcitonBasis b = diagonalize_dimer(dimer(2.0, 2.1, 0.0));
    const OpticalRates r = exciton_optical_rates(b, 0.0, 1e-6);
    CHECK(r.gamma_plus_g == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(r.gamma_minus_g == doctest::Approx(0.0).epsilon(1e-18));
  }
  SUBCASE("sum equals gamma_1g + gamma_2g for random dimers") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double z = u(rng);
      const double gamma_2g = 1e-6 * (0.5 + u(rng));
      const ExcitonBasis b =
          diagonalize_dimer(dimer(2.0, 2.0 + 0.3 * u(rng), 0.03 * u(rng)));
      const OpticalRates r = exciton_optical_rates(b, z, gamma_2g);
      CHECK(r.gamma_plus_g + r.gamma_minus_g ==
            doctest::Approx((1.0 + z * z) * gamma_2g).epsilon(1e-12));
    }
  }
}

TEST_CASE("trap transfer rates per model") {
  SUBCASE("antisymmetric reaction-centre coupling blocks the bright exciton") {
    PhotocellParams p = dimer(2.0, 2.0, 0.02);
    p.model = ModelKind::symmetric;
    p.z = 1.0;
    p.gamma_1alpha = 1e-6;
    p.theta_rc = M_PI;
    const TrapRates r = trap_transfer_rates(p, diagonalize_dimer(p));
    CHECK(r.gamma_plus_alpha == doctest::Approx(0.0).epsilon(1e-18));
    CHECK(r.gamma_minus_alpha == doctest::Approx(2e-6).epsilon(1e-12));
  }
  SUBCASE("localized limit routes everything through the lower exciton") {
    PhotocellParams p = dimer(2.0, 2.1, 1e-9);
    p.gamma_1alpha = 1e-6;
    const TrapRates r = trap_transfer_rates(p, diagonalize_dimer(p));
    CHECK(r.gamma_plus_alpha == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.gamma_minus_alpha == doctest::Approx(1e-6).epsilon(1e-9));
  }
  SUBCASE("dark condition at z = 0.2") {
    const double j12 = dark_state_coupling(0.2, 0.1);
    PhotocellParams p = dimer(2.0, 2.1, j12);
    p.z = 0.2;
    p.gamma_1alpha = 1e-6;
    const TrapRates r = trap_transfer_rates(p, diagonalize_dimer(p));
    CHECK(r.gamma_minus_alpha ==
          doctest::Approx(1e-6 / 1.04).epsilon(1e-9));
    CHECK(r.gamma_plus_alpha + r.gamma_minus_alpha ==
          doctest::Approx(1e-6).epsilon(1e-12));
  }
  SUBCASE("independent model transfers from both sites") {
    PhotocellParams p = dimer(2.0, 2.0, 0.0);
    p.model = ModelKind::independent;
    p.gamma_1alpha = p.gamma_2alpha = 1e-6;
    const TrapRates r = trap_transfer_rates(p, diagonalize_dimer(p));
    CHECK(r.gamma_plus_alpha == doctest::Approx(1e-6));
    CHECK(r.gamma_minus_alpha == doctest::Approx(1e-6));
  }
}

TEST_CASE("lower exciton pinning") {
  SUBCASE("trivial uncoupled case") {
    PhotocellParams p = dimer(1.0, 1.0, 0.0);
    p = fix_lower_exciton(p, 2.0);
    CHECK(p.eps1 == doctest::Approx(2.0));
    CHECK(p.eps2 == doctest::Approx(2.0));
  }
  SUBCASE("detuned coupled case lands on target") {
    PhotocellParams p = dimer(0.0, 0.1, 0.02);
    p = fix_lower_exciton(p, 2.0);
    CHECK(p.eps1 == doctest::Approx(2.00099).epsilon(1e-5));
    CHECK(diagonalize_dimer(p).eps_minus ==
          doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("symmetric case shifts by half the coupling") {
    PhotocellParams p = dimer(0.0, 0.0, 0.01);
    p.model = ModelKind::symmetric;
    p = fix_lower_exciton(p, 2.0);
    CHECK(p.eps1 == doctest::Approx(2.005).epsilon(1e-12));
    CHECK(p.eps2 == doctest::Approx(2.005).epsilon(1e-12));
  }
}
