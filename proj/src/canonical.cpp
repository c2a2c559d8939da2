#include "bosegas/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <omp.h>

#include "bosegas/errors.hpp"
#include "bosegas/grand.hpp"
#include "bosegas/mode_sum.hpp"

namespace bosegas {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kImagResidualTol = 1e-8;

int default_quad_points(int N) {
  const int by_width = 64 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(N))));
  int m = std::max(512, by_width);
  if (m % 2 != 0) ++m;
  return m;
}

double log_sum_exp(const std::vector<double>& terms) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double t : terms) mx = std::max(mx, t);
  double s = 0.0;
  for (double t : terms) s += std::exp(t - mx);
  return mx + std::log(s);
}

}  // namespace

std::vector<double> partition_recursion(const Spectrum& spec, double beta, int N,
                                        Exec exec) {
  if (N < 1) throw std::domain_error("partition_recursion: N must be >= 1");
  // b_k in log space; the k-loop is embarrassingly parallel.
  std::vector<double> log_b(N + 1, 0.0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= N; ++k)
      log_b[k] = log_trace_heat(spec, k * beta, Exec::serial);
  } else {
    for (int k = 1; k <= N; ++k)
      log_b[k] = log_trace_heat(spec, k * beta, Exec::serial);
  }

  std::vector<double> log_z(N + 1);
  log_z[0] = 0.0;
  std::vector<double> terms;
  for (int n = 1; n <= N; ++n) {
    terms.resize(n);
    for (int k = 1; k <= n; ++k) terms[k - 1] = log_b[k] + log_z[n - k];
    log_z[n] = log_sum_exp(terms) - std::log(static_cast<double>(n));
  }
  return log_z;
}

ContourResult partition_contour(const Spectrum& spec, double beta, int N, int M,
                                Exec exec) {
  if (N < 1) throw std::domain_error("partition_contour: N must be >= 1");
  if (M == 0) M = default_quad_points(N);
  if (M % 2 != 0 || M < default_quad_points(N))
    throw std::domain_error("partition_contour: M must be even and >= M_min(N)");

  const double vol = spec.L * spec.L * spec.L;
  const double rho_eff = N / vol;
  const double x = invert_fugacity_finite(spec, beta, rho_eff);
  const ModeSum ms = build_mode_sum(spec, beta);

  // Everything is measured relative to the saddle: the node exponent is
  // beta L^3 [P_L(x e^{i phi}) - P_L(x)] = S0 - S(phi) with
  // S(phi) = sum_j log(1 - x e^{i phi} e^{-beta E_j}).
  const double S0 = log_one_minus_sum(ms, x, exec).real();
  std::vector<cplx> node(M);
  const double dphi = 2.0 * kPi / M;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < M; ++k) {
      const double phi = -kPi + k * dphi;
      const cplx s = log_one_minus_sum(ms, x * std::polar(1.0, phi), Exec::serial);
      node[k] = std::exp(S0 - s - cplx(0.0, N * phi));
    }
  } else {
    for (int k = 0; k < M; ++k) {
      const double phi = -kPi + k * dphi;
      const cplx s = log_one_minus_sum(ms, x * std::polar(1.0, phi), Exec::serial);
      node[k] = std::exp(S0 - s - cplx(0.0, N * phi));
    }
  }
  cplx quad = 0.0;
  for (const cplx& v : node) quad += v;  // fixed order
  quad *= std::sqrt(static_cast<double>(N)) / M;  // (sqrt(N)/2pi) * dphi * sum

  ContourResult r;
  r.quad_points = M;
  r.x_L = x;
  r.rel_residual_imag = std::abs(quad.imag()) / std::abs(quad);
  if (!(r.rel_residual_imag < kImagResidualTol))
    throw NumericalError("partition_contour: imaginary residual too large",
                         r.rel_residual_imag);
  r.A_L = quad.real();
  if (!(r.A_L > 0.0))
    throw NumericalError("partition_contour: non-positive saddle factor", r.A_L);
  const double pressure = -S0 / (beta * vol);
  r.f_tilde = legendre_free_energy(pressure, x, beta, rho_eff);
  r.logZ = -beta * vol * r.f_tilde -
           0.5 * std::log(static_cast<double>(N)) + std::log(r.A_L);
  return r;
}

SaddleDiagnostics saddle_diagnostics(const Spectrum& spec, double beta, int N,
                                     double delta) {
  if (N < 1) throw std::domain_error("saddle_diagnostics: N must be >= 1");
  if (!(delta > 0.0) || !(delta < 0.5))
    throw std::domain_error("saddle_diagnostics: delta must be in (0, 1/2)");

  const double vol = spec.L * spec.L * spec.L;
  const double rho_eff = N / vol;
  const double x = invert_fugacity_finite(spec, beta, rho_eff);
  const ModeSum ms = build_mode_sum(spec, beta);

  SaddleDiagnostics d;
  // Closed form: -(x / beta L^3) sum_j e^{-beta E_j} / (1 - x e^{-beta E_j})^2.
  d.p_tilde_2nd = -x / (beta * vol) * occupation_dx_sum(ms, x);

  auto s_of_phi = [&](double phi) {
    return -log_one_minus_sum(ms, x * std::polar(1.0, phi)).imag() / (beta * vol);
  };
  const double h = 1e-3;
  const double s1 = s_of_phi(h), s2 = s_of_phi(2 * h);
  const double sm1 = s_of_phi(-h), sm2 = s_of_phi(-2 * h);
  d.s_at_0 = s_of_phi(0.0);
  d.s_prime_0 = (-s2 + 8.0 * s1 - 8.0 * sm1 + sm2) / (12.0 * h);
  d.s_second_0 =
      (-s2 + 16.0 * s1 - 30.0 * d.s_at_0 + 16.0 * sm1 - sm2) / (12.0 * h * h);
  d.phi_L = std::pow(static_cast<double>(N), -0.5 + delta / 3.0);

  const double x_inf = invert_fugacity_infinite(beta, rho_eff, spec.omega);
  const double p2_inf = -x_inf / beta * density_infinite_dx(beta, x_inf, spec.omega);
  d.A_inf = std::sqrt(-rho_eff / (2.0 * kPi * beta * p2_inf));
  return d;
}

double reduced_free_energy(const Spectrum& spec, double beta, int N, int M) {
  const ContourResult r = partition_contour(spec, beta, N, M);
  const double vol = spec.L * spec.L * spec.L;
  return -r.logZ / (beta * vol);
}

MagnetizationResult canonical_magnetization(const GasParams& params,
                                            const GridSpec& grid, double delta,
                                            double h_omega) {
  params.validate();
  if (!(delta > 0.0) || !(delta < 0.5))
    throw std::domain_error("canonical_magnetization: delta must be in (0, 1/2)");
  if (!(h_omega > 0.0))
    throw std::domain_error("canonical_magnetization: h_omega must be > 0");

  const double vol = params.L * params.L * params.L;
  const int N = static_cast<int>(std::lround(params.rho * vol));
  if (N < 2)
    throw std::domain_error("canonical_magnetization: round(rho L^3) must be >= 2");
  const double rho_eff = N / vol;

  const auto spec_c = cached_spectrum(params.L, params.omega, grid);
  const auto spec_m = cached_spectrum(params.L, params.omega - h_omega, grid);
  const auto spec_p = cached_spectrum(params.L, params.omega + h_omega, grid);

  const double f_plus = reduced_free_energy(*spec_p, params.beta, N);
  const double f_minus = reduced_free_energy(*spec_m, params.beta, N);

  MagnetizationResult r;
  r.N = N;
  r.m_L = (f_plus - f_minus) / (2.0 * h_omega);
  r.m_tilde_L = m_tilde(*spec_c, *spec_m, *spec_p, params.beta, rho_eff, h_omega);
  r.gap = std::abs(r.m_L - r.m_tilde_L);
  return r;
}

}  // namespace bosegas
