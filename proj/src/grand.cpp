#include "bosegas/grand.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bosegas/errors.hpp"
#include "bosegas/specfun.hpp"

namespace bosegas {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kSingularityMargin = 1e-10;
constexpr double kLandauTermCut = 1e-18;

double volume(const Spectrum& spec) { return spec.L * spec.L * spec.L; }

// |z| must stay below e^{beta E0}; the pressure sum develops its dominant
// singularity there.
void check_fugacity_radius(const Spectrum& spec, double beta, const cplx& z) {
  const double zmax = std::exp(beta * ground_energy(spec));
  if (std::abs(z) >= zmax * (1.0 - kSingularityMargin))
    throw std::domain_error(
        "fugacity too close to the dominant singularity e^{beta E0}");
}

}  // namespace

std::complex<double> pressure_finite(const Spectrum& spec, double beta,
                                     std::complex<double> z, Exec exec) {
  check_fugacity_radius(spec, beta, z);
  const ModeSum ms = build_mode_sum(spec, beta);
  return -log_one_minus_sum(ms, z, exec) / (beta * volume(spec));
}

std::complex<double> density_finite(const Spectrum& spec, double beta,
                                    std::complex<double> z, Exec exec) {
  check_fugacity_radius(spec, beta, z);
  const ModeSum ms = build_mode_sum(spec, beta);
  return occupation_sum(ms, z, exec) / volume(spec);
}

double density_finite_dx(const Spectrum& spec, double beta, double x, Exec exec) {
  check_fugacity_radius(spec, beta, x);
  const ModeSum ms = build_mode_sum(spec, beta);
  return occupation_dx_sum(ms, x, exec) / volume(spec);
}

std::complex<double> pressure_infinite(double beta, std::complex<double> z,
                                       double omega) {
  if (!(beta > 0.0) || !(omega > 0.0))
    throw std::domain_error("pressure_infinite: need beta > 0, omega > 0");
  const double step = std::exp(-omega * beta);
  cplx zeta = z * std::exp(-0.5 * omega * beta);
  cplx sum = 0.0;
  while (std::abs(zeta) >= kLandauTermCut) {
    sum += bose_g(1.5, zeta);
    zeta *= step;
  }
  return omega * std::pow(2.0 * kPi * beta, -1.5) * sum;
}

std::complex<double> density_infinite(double beta, std::complex<double> z,
                                      double omega) {
  if (!(beta > 0.0) || !(omega > 0.0))
    throw std::domain_error("density_infinite: need beta > 0, omega > 0");
  const double step = std::exp(-omega * beta);
  cplx zeta = z * std::exp(-0.5 * omega * beta);
  cplx sum = 0.0;
  while (std::abs(zeta) >= kLandauTermCut) {
    sum += bose_g(0.5, zeta);
    zeta *= step;
  }
  return beta * omega * std::pow(2.0 * kPi * beta, -1.5) * sum;
}

std::complex<double> magnetization_grand_infinite(double beta,
                                                  std::complex<double> z,
                                                  double omega) {
  if (!(beta > 0.0) || !(omega > 0.0))
    throw std::domain_error("magnetization_grand_infinite: need beta > 0, omega > 0");
  const double step = std::exp(-omega * beta);
  cplx zeta = z * std::exp(-0.5 * omega * beta);
  cplx sum = 0.0;
  int k = 0;
  while (std::abs(zeta) >= kLandauTermCut) {
    sum += bose_g(1.5, zeta) - omega * beta * (k + 0.5) * bose_g(0.5, zeta);
    zeta *= step;
    ++k;
  }
  return -std::pow(2.0 * kPi * beta, -1.5) * sum;
}

std::complex<double> magnetization_grand_finite(const Spectrum& spec_minus,
                                                const Spectrum& spec_plus,
                                                double beta,
                                                std::complex<double> z,
                                                double h_omega) {
  if (!(h_omega > 0.0))
    throw std::domain_error("magnetization_grand_finite: need h_omega > 0");
  const cplx p_plus = pressure_finite(spec_plus, beta, z);
  const cplx p_minus = pressure_finite(spec_minus, beta, z);
  return -(p_plus - p_minus) / (2.0 * h_omega);
}

double invert_fugacity(const std::function<double(double)>& density_fn,
                       double rho, double x_sup,
                       const std::function<double(double)>& drho_dx) {
  if (!(rho > 0.0)) throw std::domain_error("invert_fugacity: rho must be > 0");
  const double tol = 1e-10 * rho;

  // rho(x) is increasing and diverges at x_sup, so a bracket always exists;
  // march the upper end toward x_sup until it encloses rho.
  double lo = 0.0;
  double hi = 0.5 * x_sup;
  double fhi = density_fn(hi) - rho;
  while (fhi < 0.0) {
    lo = hi;
    const double next = x_sup - 0.5 * (x_sup - hi);
    if (x_sup - next <= 1e-12 * x_sup)
      throw NumericalError("invert_fugacity: bracket not found below x_sup", -fhi);
    hi = next;
    fhi = density_fn(hi) - rho;
  }

  double x = 0.5 * (lo + hi);
  double f = density_fn(x) - rho;
  double x_prev = hi, f_prev = fhi;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(f) <= tol) return x;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton step on the analytic slope when available, secant otherwise;
    // fall back to bisection whenever the iterate leaves the bracket.
    double slope;
    if (drho_dx) {
      slope = drho_dx(x);
    } else {
      slope = (f - f_prev) / (x - x_prev);
    }
    double x_next = slope > 0.0 ? x - f / slope : lo;
    if (!(x_next > lo) || !(x_next < hi)) x_next = 0.5 * (lo + hi);
    x_prev = x;
    f_prev = f;
    x = x_next;
    f = density_fn(x) - rho;
  }
  throw NumericalError("invert_fugacity: no convergence in 200 iterations",
                       std::abs(f));
}

double invert_fugacity_finite(const Spectrum& spec, double beta, double rho) {
  const ModeSum ms = build_mode_sum(spec, beta);
  const double vol = volume(spec);
  const double x_sup = std::exp(beta * ground_energy(spec)) * (1.0 - 1e-12);
  auto rho_of_x = [&](double x) { return occupation_sum(ms, x).real() / vol; };
  auto drho = [&](double x) { return occupation_dx_sum(ms, x) / vol; };
  return invert_fugacity(rho_of_x, rho, x_sup, drho);
}

double invert_fugacity_infinite(double beta, double rho, double omega) {
  const double x_sup = std::exp(0.5 * beta * omega) * (1.0 - 1e-12);
  auto rho_of_x = [&](double x) {
    return density_infinite(beta, x, omega).real();
  };
  return invert_fugacity(rho_of_x, rho, x_sup);
}

double legendre_free_energy(double pressure, double x, double beta, double rho) {
  return -pressure + rho / beta * std::log(x);
}

double free_energy_infinite(double beta, double rho, double omega) {
  const double x = invert_fugacity_infinite(beta, rho, omega);
  const double p = pressure_infinite(beta, x, omega).real();
  return legendre_free_energy(p, x, beta, rho);
}

double m_tilde(const Spectrum& spec_center, const Spectrum& spec_minus,
               const Spectrum& spec_plus, double beta, double rho,
               double h_omega) {
  const double x = invert_fugacity_finite(spec_center, beta, rho);
  return magnetization_grand_finite(spec_minus, spec_plus, beta, x, h_omega)
      .real();
}

double density_infinite_dx(double beta, double x, double omega) {
  const double h = 1e-6 * x;
  const double rp = density_infinite(beta, x + h, omega).real();
  const double rm = density_infinite(beta, x - h, omega).real();
  return (rp - rm) / (2.0 * h);
}

}  // namespace bosegas
