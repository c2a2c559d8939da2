#ifndef BOSEGAS_CANONICAL_HPP
#define BOSEGAS_CANONICAL_HPP

#include <vector>

#include "bosegas/exec.hpp"
#include "bosegas/spectrum.hpp"

namespace bosegas {

// log Z_n for n = 0..N from the bosonic recursion
//   Z_n = (1/n) sum_{k=1..n} b_k Z_{n-k},  b_k = tr e^{-k beta H},
// carried entirely in log space (log-sum-exp), so no underflow at large n.
std::vector<double> partition_recursion(const Spectrum& spec, double beta, int N,
                                        Exec exec = Exec::parallel);

struct ContourResult {
  double logZ = 0.0;
  double A_L = 0.0;                // normalized saddle factor, > 0
  double rel_residual_imag = 0.0;  // |Im quadrature| / |quadrature|
  int quad_points = 0;
  double x_L = 0.0;                // saddle radius (inverted fugacity)
  double f_tilde = 0.0;            // Legendre free energy at x_L
};

// Darwin-Fowler evaluation of Z_N on the circle through the real saddle x_L:
//   Z = e^{-beta f~ L^3} N^{-1/2} A_L,
//   A_L = sqrt(N)/(2 pi) int_{-pi}^{pi} e^{beta L^3 [P_L(x e^{i phi}) - P_L(x)]}
//         e^{-i N phi} d phi,
// by the uniform trapezoid rule (spectrally accurate for periodic analytic
// integrands). All exponents are taken relative to the saddle. M = 0 picks
// max(512, 64 ceil(sqrt(N))); M must be even. The density entering x_L is the
// effective one, N/L^3.
ContourResult partition_contour(const Spectrum& spec, double beta, int N,
                                int M = 0, Exec exec = Exec::parallel);

struct SaddleDiagnostics {
  double p_tilde_2nd = 0.0;  // d^2/dphi^2 Re P_L(x_L e^{i phi}) at 0, < 0
  double s_at_0 = 0.0;       // Im P_L(x_L), exactly 0
  double s_prime_0 = 0.0;    // = rho_eff / beta
  double s_second_0 = 0.0;   // = 0
  double phi_L = 0.0;        // window half-width N^{-1/2 + delta/3}
  double A_inf = 0.0;        // sqrt(-rho / (2 pi beta p~''_inf(0)))
};

// p~''(0) from the closed-form spectral sum; s-derivatives by 4th-order
// central differences at step 1e-3; requires 0 < delta < 1/2.
SaddleDiagnostics saddle_diagnostics(const Spectrum& spec, double beta, int N,
                                     double delta);

// f_L = -log Z_N / (beta L^3) via the contour.
double reduced_free_energy(const Spectrum& spec, double beta, int N, int M = 0);

struct MagnetizationResult {
  double m_L = 0.0;        // (e/c) d f_L / d omega, central difference
  double m_tilde_L = 0.0;  // Gamma_L at x_L(beta, rho_eff, omega)
  double gap = 0.0;        // |m_L - m_tilde_L|, surface order
  int N = 0;
};

// Canonical vs grand-canonical magnetization at N = round(rho L^3) >= 2; all
// pieces use the effective density N/L^3 and the same grid at omega -/+ h.
MagnetizationResult canonical_magnetization(const GasParams& params,
                                            const GridSpec& grid, double delta,
                                            double h_omega);

}  // namespace bosegas

#endif
