#include "bosegas/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bosegas/errors.hpp"

namespace bosegas {

namespace {

using cplx = std::complex<double>;

constexpr double kSeriesRadius = 0.5;
constexpr double kCutGuard = 1e-14;
// Upper integration limit after t = u^2: e^{-U^2} = e^{-49} < 1e-18.
constexpr double kUpperU = 7.0;
constexpr int kMaxDepth = 60;

bool valid_order(double sigma) {
  return sigma == 0.5 || sigma == 1.5 || sigma == 2.5;
}

// Gauss-Kronrod 7/15 nodes and weights on [-1,1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  cplx value;
  double error;
};

template <class F>
GkEstimate gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx resk = kWgk[7] * fc;
  cplx resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kXgk[j];
    const cplx fsum = f(c - dx) + f(c + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * hl, std::abs(resk - resg) * hl};
}

// Adaptive bisection; abs_tol is the budget for this subinterval. A piece is
// also accepted when its estimate drops below 1e-14 of its own magnitude,
// which keeps integrands with large values (near-cut arguments) convergent.
template <class F>
cplx gk_adaptive(const F& f, double a, double b, double abs_tol, int depth) {
  const GkEstimate e = gk15(f, a, b);
  if (e.error <= abs_tol || e.error <= 1e-14 * std::abs(e.value)) return e.value;
  if (depth >= kMaxDepth)
    throw NumericalError("bose_g: quadrature did not converge", e.error);
  const double c = 0.5 * (a + b);
  return gk_adaptive(f, a, c, 0.5 * abs_tol, depth + 1) +
         gk_adaptive(f, c, b, 0.5 * abs_tol, depth + 1);
}

void check_cut(const cplx& zeta) {
  if (zeta.real() >= 1.0 - kCutGuard && std::abs(zeta.imag()) <= kCutGuard)
    throw std::domain_error("bose_g: argument on or within 1e-14 of the cut [1,inf)");
}

}  // namespace

namespace detail {

std::complex<double> bose_g_series(double sigma, std::complex<double> zeta) {
  const double r = std::abs(zeta);
  if (r >= 1.0) throw std::domain_error("bose_g_series: needs |zeta| < 1");
  cplx powz = 1.0;
  cplx sum = 0.0;
  for (int n = 1; n <= 100000; ++n) {
    powz *= zeta;
    const cplx term = powz / std::pow(static_cast<double>(n), sigma);
    sum += term;
    // Geometric tail bound: sum_{m>n} r^m/m^sigma <= |term| r/(1-r).
    if (std::abs(term) * r / (1.0 - r) <= 1e-15 * std::abs(sum)) break;
  }
  return sum;
}

std::complex<double> bose_g_integral(double sigma, std::complex<double> zeta) {
  const double gamma_sigma = std::tgamma(sigma);
  const double p = 2.0 * sigma - 1.0;  // 0, 2 or 4: smooth at u = 0
  auto integrand = [&](double u) -> cplx {
    const double e = std::exp(-u * u);
    return std::pow(u, p) * e / (1.0 - zeta * e);
  };
  const cplx integral = gk_adaptive(integrand, 0.0, kUpperU, 1e-14, 0);
  return 2.0 * zeta / gamma_sigma * integral;
}

}  // namespace detail

std::complex<double> bose_g(double sigma, std::complex<double> zeta) {
  if (!valid_order(sigma))
    throw std::domain_error("bose_g: order must be one of 1/2, 3/2, 5/2");
  check_cut(zeta);
  if (std::abs(zeta) <= kSeriesRadius) return detail::bose_g_series(sigma, zeta);
  return detail::bose_g_integral(sigma, zeta);
}

std::complex<double> bose_g_derivative(double sigma, std::complex<double> zeta) {
  if (sigma != 1.5 && sigma != 2.5)
    throw std::domain_error("bose_g_derivative: order must be 3/2 or 5/2");
  check_cut(zeta);
  if (zeta == 0.0) return 1.0;  // leading series coefficient
  return bose_g(sigma - 1.0, zeta) / zeta;
}

}  // namespace bosegas
