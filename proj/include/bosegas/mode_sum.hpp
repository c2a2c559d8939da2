#ifndef BOSEGAS_MODE_SUM_HPP
#define BOSEGAS_MODE_SUM_HPP

#include <complex>
#include <vector>

#include "bosegas/exec.hpp"
#include "bosegas/spectrum.hpp"

namespace bosegas {

// Flattened active (2D x 1D) mode list for one (spectrum, beta). Pairs with
// e^{-beta E} < 1e-18 e^{-beta E_min} are dropped; the 1D ladder is extended
// until the cutoff (or up to e1d_count when the spectrum pins it).
struct ModeSum {
  std::vector<double> boltz;  // e^{-beta E_jm} for every active pair
  double e_min = 0.0;
  double beta = 0.0;
  double volume = 0.0;
};

ModeSum build_mode_sum(const Spectrum& spec, double beta);

// sum_j log(1 - z * boltz_j), principal branch. Behind P_L:
//   P_L = -log_one_minus_sum / (beta L^3).
std::complex<double> log_one_minus_sum(const ModeSum& ms, std::complex<double> z,
                                       Exec exec = Exec::parallel);

// sum_j u_j / (1 - u_j) with u_j = z * boltz_j. Behind rho_L = . / L^3.
std::complex<double> occupation_sum(const ModeSum& ms, std::complex<double> z,
                                    Exec exec = Exec::parallel);

// sum_j boltz_j / (1 - x boltz_j)^2, real x. Behind d(rho_L)/dx = . / L^3.
double occupation_dx_sum(const ModeSum& ms, double x, Exec exec = Exec::parallel);

}  // namespace bosegas

#endif
