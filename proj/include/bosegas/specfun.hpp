#ifndef BOSEGAS_SPECFUN_HPP
#define BOSEGAS_SPECFUN_HPP

#include <complex>

namespace bosegas {

// Bose functions g_sigma(zeta) = sum_{n>=1} zeta^n / n^sigma, continued to
// the cut plane C \ [1,inf) by the integral representation
//   g_sigma(zeta) = zeta/Gamma(sigma) * int_0^inf t^{sigma-1} e^{-t} / (1 - zeta e^{-t}) dt.
// Supported orders: sigma in {1/2, 3/2, 5/2}.
//
// |zeta| <= 0.5 is evaluated by the power series (relative tail 1e-15),
// everything else by adaptive Gauss-Kronrod after the substitution t = u^2,
// which turns the weight into the smooth even monomial u^{2 sigma - 1}.
// Points within 1e-14 of the cut are rejected (domain_error).
std::complex<double> bose_g(double sigma, std::complex<double> zeta);

// g_sigma'(zeta) = g_{sigma-1}(zeta) / zeta (term-by-term from the series);
// value 1 at zeta = 0. Requires sigma in {3/2, 5/2} so that sigma-1 stays
// in the supported set.
std::complex<double> bose_g_derivative(double sigma, std::complex<double> zeta);

namespace detail {

// The two evaluation routes, exposed so their overlap can be validated.
// The series requires |zeta| < 1; the integral only needs zeta off the cut.
std::complex<double> bose_g_series(double sigma, std::complex<double> zeta);
std::complex<double> bose_g_integral(double sigma, std::complex<double> zeta);

}  // namespace detail

}  // namespace bosegas

#endif
