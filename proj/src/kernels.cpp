#include "bosegas/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bosegas {

namespace {

constexpr double kPi = std::numbers::pi;

// u/sinh(u) and u/tanh(u), series-guarded near u = 0.
double u_over_sinh(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + 7.0 * u2 * u2 / 360.0;
  }
  return u / std::sinh(u);
}

double u_over_tanh(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 + u2 / 3.0 - u2 * u2 / 45.0;
  }
  return u / std::tanh(u);
}

}  // namespace

double kernel_1d_dirichlet(double x, double xp, double beta, double L) {
  if (!(beta > 0.0) || !(L > 0.0))
    throw std::domain_error("kernel_1d_dirichlet: need beta > 0, L > 0");
  if (!(std::abs(x) < 0.5 * L) || !(std::abs(xp) < 0.5 * L))
    throw std::domain_error("kernel_1d_dirichlet: points must be inside (-L/2, L/2)");
  const double inv2b = 1.0 / (2.0 * beta);
  auto direct = [&](int m) { return std::exp(-std::pow(x - xp + 2.0 * m * L, 2) * inv2b); };
  auto image = [&](int m) { return std::exp(-std::pow(x + xp - 2.0 * m * L - L, 2) * inv2b); };

  const double leading = direct(0);
  double sum = direct(0) - image(0);
  for (int m = 1; m < 100000; ++m) {
    const double shell_pos = direct(m) - image(m);
    const double shell_neg = direct(-m) - image(-m);
    sum += shell_pos + shell_neg;
    const double shell_mag =
        std::max(std::max(direct(m), image(m)), std::max(direct(-m), image(-m)));
    if (shell_mag <= 1e-16 * leading) break;
  }
  return sum / std::sqrt(2.0 * kPi * beta);
}

double kernel_free_3d(const Vec3& x, const Vec3& xp, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("kernel_free_3d: need beta > 0");
  const double d0 = x[0] - xp[0], d1 = x[1] - xp[1], d2 = x[2] - xp[2];
  const double r2 = d0 * d0 + d1 * d1 + d2 * d2;
  return std::pow(2.0 * kPi * beta, -1.5) * std::exp(-r2 / (2.0 * beta));
}

double magnetic_phase(const Vec3& x, const Vec3& xp) {
  return 0.5 * (xp[0] * x[1] - xp[1] * x[0]);
}

std::complex<double> kernel_magnetic_free(const Vec3& x, const Vec3& xp,
                                          double beta, double omega) {
  if (!(beta > 0.0)) throw std::domain_error("kernel_magnetic_free: need beta > 0");
  if (omega < 0.0) throw std::domain_error("kernel_magnetic_free: need omega >= 0");
  const double u = 0.5 * omega * beta;
  const double dperp2 = std::pow(x[0] - xp[0], 2) + std::pow(x[1] - xp[1], 2);
  const double dpar2 = std::pow(x[2] - xp[2], 2);
  const double amp = std::pow(2.0 * kPi * beta, -1.5) * u_over_sinh(u) *
                     std::exp(-(u_over_tanh(u) * dperp2 + dpar2) / (2.0 * beta));
  return std::polar(amp, omega * magnetic_phase(x, xp));
}

double diagonal_density(double beta, double omega) {
  if (!(beta > 0.0) || omega < 0.0)
    throw std::domain_error("diagonal_density: need beta > 0, omega >= 0");
  return std::pow(2.0 * kPi * beta, -1.5) * u_over_sinh(0.5 * omega * beta);
}

double diagonal_density_domega(double beta, double omega) {
  if (!(beta > 0.0) || omega < 0.0)
    throw std::domain_error("diagonal_density_domega: need beta > 0, omega >= 0");
  const double u = 0.5 * omega * beta;
  // d/du [u / sinh u]; the direct form cancels catastrophically near 0.
  double dsu;
  if (std::abs(u) < 0.1) {
    const double u2 = u * u;
    dsu = -u / 3.0 + 7.0 * u * u2 / 90.0 - 31.0 * u * u2 * u2 / 2520.0;
  } else {
    const double sh = std::sinh(u);
    dsu = (sh - u * std::cosh(u)) / (sh * sh);
  }
  return std::pow(2.0 * kPi * beta, -1.5) * dsu * 0.5 * beta;
}

TraceAsymptote trace_asymptote_check(const Spectrum& spec, double beta) {
  const double vol = spec.L * spec.L * spec.L;
  TraceAsymptote r;
  r.lhs = trace_heat(spec, beta) / vol;
  r.rhs = diagonal_density(beta, spec.omega);
  r.scaled_gap = std::abs(r.lhs - r.rhs) * spec.L;
  return r;
}

}  // namespace bosegas
