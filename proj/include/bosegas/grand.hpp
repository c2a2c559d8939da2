#ifndef BOSEGAS_GRAND_HPP
#define BOSEGAS_GRAND_HPP

#include <complex>
#include <functional>

#include "bosegas/exec.hpp"
#include "bosegas/mode_sum.hpp"
#include "bosegas/spectrum.hpp"

namespace bosegas {

// Grand-canonical equation of state. Finite volume is spectral:
//   P_L = -(1/beta L^3) sum_j log(1 - z e^{-beta E_j}),
//   rho_L = (1/L^3) sum_j z e^{-beta E_j} / (1 - z e^{-beta E_j});
// infinite volume is a Landau-level ladder of Bose functions:
//   P_inf   = omega (2 pi beta)^{-3/2} sum_k g_{3/2}(z e^{-(k+1/2) omega beta})
//   rho_inf = beta omega (2 pi beta)^{-3/2} sum_k g_{1/2}(..).

std::complex<double> pressure_finite(const Spectrum& spec, double beta,
                                     std::complex<double> z,
                                     Exec exec = Exec::parallel);
std::complex<double> density_finite(const Spectrum& spec, double beta,
                                    std::complex<double> z,
                                    Exec exec = Exec::parallel);
// d rho_L / dx for real fugacity; a positive spectral sum.
double density_finite_dx(const Spectrum& spec, double beta, double x,
                         Exec exec = Exec::parallel);

std::complex<double> pressure_infinite(double beta, std::complex<double> z,
                                       double omega);
std::complex<double> density_infinite(double beta, std::complex<double> z,
                                      double omega);

// Gamma_inf = -dP_inf/d omega, term-wise analytic via zeta g'_{3/2} = g_{1/2}:
//   -(2 pi beta)^{-3/2} sum_k [ g_{3/2}(zeta_k) - omega beta (k+1/2) g_{1/2}(zeta_k) ].
std::complex<double> magnetization_grand_infinite(double beta,
                                                  std::complex<double> z,
                                                  double omega);

// Gamma_L by a central omega-difference of the spectral pressure; the two
// spectra must come from the same grid at omega -/+ h_omega.
std::complex<double> magnetization_grand_finite(const Spectrum& spec_minus,
                                                const Spectrum& spec_plus,
                                                double beta,
                                                std::complex<double> z,
                                                double h_omega);

// Unique x in (0, x_sup) with |density_fn(x) - rho| <= 1e-10 rho; bracketed
// bisection refined by safeguarded Newton (bisection step whenever the Newton
// iterate leaves the bracket). drho_dx may be empty (secant slope is used).
double invert_fugacity(const std::function<double(double)>& density_fn,
                       double rho, double x_sup,
                       const std::function<double(double)>& drho_dx = {});

double invert_fugacity_finite(const Spectrum& spec, double beta, double rho);
double invert_fugacity_infinite(double beta, double rho, double omega);

// f~ = -P + (rho/beta) log x.
double legendre_free_energy(double pressure, double x, double beta, double rho);

// f_inf at fixed density: Legendre transform at the inverted x_inf.
double free_energy_infinite(double beta, double rho, double omega);

// m~_L = Gamma_L(x_L): the omega-difference of P is taken with the fugacity
// held at the central-omega solution (the explicit dx/d omega terms cancel).
double m_tilde(const Spectrum& spec_center, const Spectrum& spec_minus,
               const Spectrum& spec_plus, double beta, double rho,
               double h_omega);

// Central-difference d rho_inf / dx at real x (analytic route would need
// g_{-1/2}, outside the supported order set).
double density_infinite_dx(double beta, double x, double omega);

// Default differencing step in omega.
inline double default_h_omega(double omega) {
  return omega * 1e-3 > 1e-4 ? omega * 1e-3 : 1e-4;
}

}  // namespace bosegas

#endif
