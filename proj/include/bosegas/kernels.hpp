#ifndef BOSEGAS_KERNELS_HPP
#define BOSEGAS_KERNELS_HPP

#include <array>
#include <complex>

#include "bosegas/spectrum.hpp"

namespace bosegas {

using Vec3 = std::array<double, 3>;

// 1D Dirichlet heat kernel on (-L/2, L/2) by the method of images. The image
// sum is truncated once the discarded shell is below 1e-16 of the leading
// free-kernel term (Gaussian decay in mL keeps this uniform in beta, L).
double kernel_1d_dirichlet(double x, double xp, double beta, double L);

// (2 pi beta)^{-3/2} exp(-|x-x'|^2 / (2 beta))
double kernel_free_3d(const Vec3& x, const Vec3& xp, double beta);

// Magnetic phase phi(x,x') = (1/2) e3 . (x' ^ x); antisymmetric.
double magnetic_phase(const Vec3& x, const Vec3& xp);

// Free-space magnetic heat kernel
//   e^{i omega phi} (2 pi beta)^{-3/2} (u/sinh u)
//     exp{ -[ (u/tanh u)(e3 ^ (x-x'))^2 + (e3.(x-x'))^2 ] / (2 beta) },
// with u = omega beta / 2.
std::complex<double> kernel_magnetic_free(const Vec3& x, const Vec3& xp,
                                          double beta, double omega);

// Diagonal value g(beta, omega) = (2 pi beta)^{-3/2} (u/sinh u); positive and
// decreasing in omega.
double diagonal_density(double beta, double omega);
// Analytic d/d omega of the above; negative for omega > 0, vanishing at 0.
double diagonal_density_domega(double beta, double omega);

struct TraceAsymptote {
  double lhs;         // trace_heat(spec, beta) / L^3
  double rhs;         // g(beta, omega)
  double scaled_gap;  // |lhs - rhs| * L
};

// Desk-scale probe of tr W_L / L^3 = g(beta,omega) (1 + O(1/L)).
TraceAsymptote trace_asymptote_check(const Spectrum& spec, double beta);

}  // namespace bosegas

#endif
