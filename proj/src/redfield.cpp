#include "photocell/redfield.hpp"

#include <cmath>

#include "photocell/constants.hpp"
#include "photocell/optimize.hpp"

namespace photocell {

namespace {

using Complex = std::complex<double>;

constexpr double kDegeneracyTol = 1e-9;  // eV, secular filter
constexpr double kPhononShiftFraction = 0.1;

int idx(int i, int j) { return 5 * i + j; }

// Rotation from the site basis {1, 2, alpha, beta, g} into the energy
// eigenbasis {+, -, alpha, beta, g}: columns are eigenvectors.
Eigen::Matrix<double, 5, 5> site_to_eigen(const ExcitonBasis& basis) {
  Eigen::Matrix<double, 5, 5> u = Eigen::Matrix<double, 5, 5>::Identity();
  u(0, 0) = basis.ovl_p1;
  u(1, 0) = basis.ovl_p2;
  u(0, 1) = basis.ovl_m1;
  u(1, 1) = basis.ovl_m2;
  return u;
}

Matrix5c to_eigenbasis(const Matrix5c& site_op, const ExcitonBasis& basis) {
  const Eigen::Matrix<double, 5, 5> u = site_to_eigen(basis);
  return u.transpose().cast<Complex>() * site_op * u.cast<Complex>();
}

}  // namespace

std::vector<CouplingChannel> build_coupling_operators(
    const PhotocellParams& params) {
  const ExcitonBasis basis = diagonalize_dimer(params);
  std::vector<CouplingChannel> channels;
  auto add = [&](std::string name, const Matrix5c& site_op, Bath bath,
                 double temperature, double rate, double shift) {
    if (rate == 0.0) return;
    channels.push_back({std::move(name), to_eigenbasis(site_op, basis), bath,
                        temperature, rate, shift});
  };

  // Site indices within the 5x5 site basis {1, 2, alpha, beta, g}.
  constexpr int s1 = 0, s2 = 1, sa = 2, sb = 3, sg = 4;
  auto lower = [](int a, int b) {
    Matrix5c op = Matrix5c::Zero();
    op(a, b) = 1.0;
    op(b, a) = 1.0;
    return op;
  };
  auto project = [](int a) {
    Matrix5c op = Matrix5c::Zero();
    op(a, a) = 1.0;
    return op;
  };

  if (params.model == ModelKind::independent) {
    // Uncorrelated optical baths and independent trap couplings per site.
    add("optical-1", lower(s1, sg), Bath::photon, params.t_hot,
        0.5 * params.optical_sum(), 0.0);
    add("optical-2", lower(s2, sg), Bath::photon, params.t_hot,
        0.5 * params.optical_sum(), 0.0);
    add("trap-1", lower(s1, sa), Bath::phonon, params.t_cold,
        params.gamma_1alpha, kPhononShiftFraction);
    add("trap-2", lower(s2, sa), Bath::phonon, params.t_cold,
        params.gamma_1alpha, kPhononShiftFraction);
  } else {
    // Collective optical channel: both dipoles couple to the same field, so
    // the interference producing the bright/dark splitting lives inside one
    // operator.
    Matrix5c optical = Matrix5c::Zero();
    optical(s1, sg) = params.z;
    optical(sg, s1) = params.z;
    optical(s2, sg) = 1.0;
    optical(sg, s2) = 1.0;
    add("optical", optical, Bath::photon, params.t_hot, params.gamma_2g, 0.0);

    if (params.model == ModelKind::symmetric) {
      // Trap coupling with relative phase theta_rc between the molecules.
      Matrix5c trap = Matrix5c::Zero();
      const Complex phase = std::polar(1.0, params.theta_rc);
      trap(s1, sa) = 1.0;
      trap(sa, s1) = 1.0;
      trap(s2, sa) = phase;
      trap(sa, s2) = std::conj(phase);
      add("trap", trap, Bath::phonon, params.t_cold, params.gamma_1alpha,
          kPhononShiftFraction);
    } else {
      add("trap-1", lower(s1, sa), Bath::phonon, params.t_cold,
          params.gamma_1alpha, kPhononShiftFraction);
    }
  }

  add("phonon-1", project(s1), Bath::phonon, params.t_cold, params.gamma_11,
      kPhononShiftFraction);
  add("phonon-2", project(s2), Bath::phonon, params.t_cold, params.gamma_22,
      kPhononShiftFraction);
  add("trap-decay", lower(sa, sb), Bath::phonon, params.t_cold,
      params.gamma_alphabeta, kPhononShiftFraction);
  add("leakage", lower(sa, sg), Bath::phonon, params.t_cold,
      params.chi * params.gamma_alphabeta, kPhononShiftFraction);
  add("trap-reset", lower(sb, sg), Bath::phonon, params.t_cold,
      params.gamma_betag, kPhononShiftFraction);
  return channels;
}

BathLine half_fourier_rate(const CouplingChannel& channel, double omega) {
  BathLine line;
  line.omega = omega;
  const double n = bose_occupation(std::abs(omega), channel.temperature);
  if (omega > 0.0)
    line.real_part = 0.5 * channel.base_rate * (n + 1.0);
  else if (omega < 0.0)
    line.real_part = 0.5 * channel.base_rate * n;
  else
    line.real_part = 0.5 * channel.base_rate;
  line.imag_part =
      channel.bath == Bath::phonon ? channel.shift_fraction * channel.base_rate
                                   : 0.0;
  return line;
}

LiouvilleGenerator build_redfield_generator(const PhotocellParams& params,
                                            bool secular,
                                            std::optional<double> dephasing) {
  const ExcitonBasis basis = diagonalize_dimer(params);
  LiouvilleGenerator gen;
  gen.secular = secular;
  gen.basis = basis;
  gen.energies = {basis.eps_plus, basis.eps_minus, params.eps_alpha,
                  params.eps_beta, 0.0};
  gen.k.setZero();

  const auto& eps = gen.energies;
  auto delta = [&](int a, int b) { return eps[a] - eps[b]; };

  // Coherent part, -i (eps_i - eps_j) rho_ij.
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      gen.k(idx(i, j), idx(i, j)) -= Complex(0.0, delta(i, j));

  // One-sided bath transform: Gamma(d) = C(-d)/2 + i*lambda, where C is the
  // golden-rule rate at the transition frequency -d.
  const std::vector<CouplingChannel> channels =
      build_coupling_operators(params);
  for (const CouplingChannel& ch : channels) {
    auto gamma = [&](double d) {
      const BathLine line = half_fourier_rate(ch, -d);
      return Complex(line.real_part, line.imag_part);
    };
    const Matrix5c& a = ch.op;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int r = 0; r < 5; ++r)
          for (int s = 0; s < 5; ++s) {
            Complex elem = 0.0;
            if (j == s)
              for (int k = 0; k < 5; ++k)
                elem += gamma(delta(k, r)) * a(i, k) * a(k, r);
            if (i == r)
              for (int k = 0; k < 5; ++k)
                elem += std::conj(gamma(delta(k, s))) * a(s, k) * a(k, j);
            elem -= a(i, r) * a(s, j) *
                    (gamma(delta(i, r)) + std::conj(gamma(delta(j, s))));
            gen.k(idx(i, j), idx(r, s)) -= elem;
          }
  }

  if (dephasing && *dephasing > 0.0) {
    // Site-basis pure dephasing, added as a Lindblad dissipator.
    Matrix5c a_site = Matrix5c::Zero();
    const double amp = std::sqrt(*dephasing / 2.0);
    a_site(0, 0) = amp;
    a_site(1, 1) = -amp;
    const Matrix5c a = to_eigenbasis(a_site, basis);
    const Matrix5c a2 = a * a;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int r = 0; r < 5; ++r)
          for (int s = 0; s < 5; ++s) {
            Complex elem = a(i, r) * std::conj(a(j, s));
            if (j == s) elem -= 0.5 * a2(i, r);
            if (i == r) elem -= 0.5 * std::conj(a2(j, s));
            gen.k(idx(i, j), idx(r, s)) += elem;
          }
  }

  if (secular) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int r = 0; r < 5; ++r)
          for (int s = 0; s < 5; ++s)
            if (std::abs(delta(r, s) - delta(i, j)) > kDegeneracyTol)
              gen.k(idx(i, j), idx(r, s)) = 0.0;
  }
  return gen;
}

Matrix5c steady_state_liouville(const LiouvilleGenerator& gen) {
  // Bordered solve in extended precision: the generator mixes eV-scale
  // coherent terms with rates down to 1e-12 eV, which exhausts double
  // precision exactly where the power maximization needs accuracy.
  using ComplexLd = std::complex<long double>;
  using Matrix25ld = Eigen::Matrix<ComplexLd, 25, 25>;
  using Vector25ld = Eigen::Matrix<ComplexLd, 25, 1>;

  Matrix25ld a = gen.k.cast<ComplexLd>();
  // Replace the ground-population balance row by the trace constraint.
  a.row(idx(4, 4)).setZero();
  for (int i = 0; i < 5; ++i) a(idx(4, 4), idx(i, i)) = 1.0L;
  Vector25ld b = Vector25ld::Zero();
  b(idx(4, 4)) = 1.0L;

  Eigen::FullPivLU<Matrix25ld> lu(a);
  if (lu.rank() < 25)
    throw NumericalError("steady_state_liouville: degenerate null space");
  const Vector25ld v = lu.solve(b);

  Matrix5c rho;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      rho(i, j) = Complex(static_cast<double>(v(idx(i, j)).real()),
                          static_cast<double>(v(idx(i, j)).imag()));
  rho = 0.5 * (rho + rho.adjoint().eval());  // remove residual asymmetry
  return rho;
}

double redfield_power_at(const PhotocellParams& params, double gamma_alphabeta,
                         bool secular, std::optional<double> dephasing) {
  PhotocellParams p = params;
  p.gamma_alphabeta = gamma_alphabeta;
  const Matrix5c rho =
      steady_state_liouville(build_redfield_generator(p, secular, dephasing));
  const double p_alpha = rho(2, 2).real();
  const double p_beta = rho(3, 3).real();
  if (p_alpha <= 0.0 || p_beta <= 0.0)
    throw NumericalError("redfield_power_at: vanishing trap populations");
  const double current = gamma_alphabeta * p_alpha;
  const double voltage = (p.eps_alpha - p.eps_beta) +
                         kBoltzmann * p.t_cold * std::log(p_alpha / p_beta);
  return current * voltage;
}

OptimizationResult maximize_redfield_power(const PhotocellParams& params,
                                           bool secular,
                                           std::optional<double> dephasing) {
  return maximize_on_log_grid(
      [&](double g) { return redfield_power_at(params, g, secular, dephasing); },
      1e-12, 1.0, 200);
}

RateRedfieldComparison compare_with_rates(const PhotocellParams& params,
                                          std::optional<double> dephasing,
                                          bool secular) {
  RateRedfieldComparison cmp;
  cmp.rate_power = maximize_power(params).best_point.power;
  cmp.redfield_power =
      maximize_redfield_power(params, secular, dephasing).best_point.power;

  const double benchmark_power =
      maximize_power(benchmark_of(params)).best_point.power;
  if (!(benchmark_power > 0.0))
    throw NumericalError("compare_with_rates: benchmark power is zero");
  cmp.rate_enhancement = cmp.rate_power / benchmark_power;
  cmp.redfield_enhancement = cmp.redfield_power / benchmark_power;
  cmp.enhancement_difference = cmp.rate_enhancement - cmp.redfield_enhancement;
  return cmp;
}

}  // namespace photocell
