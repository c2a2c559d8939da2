#ifndef BOSEGAS_SPECTRUM_HPP
#define BOSEGAS_SPECTRUM_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "bosegas/exec.hpp"

namespace bosegas {

// Physical point: inverse temperature, bulk density, cyclotron parameter
// omega = (e/c)B (units e/c = k_B = hbar = m = 1, so omega = B), box side L.
struct GasParams {
  double beta = 1.0;
  double rho = 0.05;
  double omega = 1.0;
  double L = 6.0;

  void validate() const;  // beta, rho, omega > 0 and L >= 1
};

enum class Gauge { symmetric, landau };

const char* to_string(Gauge g);
Gauge gauge_from_string(const std::string& s);

struct GridSpec {
  int n = 48;  // interior points per side of the 2D cross-section, n >= 8
  Gauge gauge = Gauge::symmetric;
};

// One-particle spectrum of the magnetic Dirichlet box, factored as
// (2D magnetic Dirichlet eigenvalues on the cross-section) + (exact 1D
// Dirichlet modes pi^2 m^2 / (2 L^2) along the field).
struct Spectrum {
  std::vector<double> e2d;  // sorted ascending, all > 0
  int e1d_count = 0;        // 0 = extend 1D modes automatically per operation
  double L = 0.0;
  double omega = 0.0;
  GridSpec grid;
};

// Allowance for O(h^2) discretization error in checks against continuum
// inequalities (min-max bound, trace bound).
inline double discretization_tolerance(double omega, int n) {
  return 5e-3 * omega + 10.0 / (static_cast<double>(n) * n);
}

// All n^2 eigenvalues of the gauge-invariant 5-point (Peierls-phase)
// discretization of (1/2)(-i grad - omega a)^2 on (-L/2, L/2)^2 with
// Dirichlet boundary, sorted ascending. Rejects grids whose magnetic flux
// per plaquette omega h^2 exceeds pi.
std::vector<double> eigs_2d_magnetic(double L, double omega, const GridSpec& grid);

// Exact 1D Dirichlet levels pi^2 m^2 / (2 L^2), m = 1..count.
std::vector<double> eigs_1d(double L, int count);
double e1d_mode(double L, int m);

Spectrum make_spectrum(double L, double omega, const GridSpec& grid);

// Cached variant. The in-process cache is keyed by (L, omega, n, gauge) and
// safe for concurrent use; if the environment variable BOSEGAS_CACHE_DIR is
// set, spectra are also persisted there in the flat text format below.
std::shared_ptr<const Spectrum> cached_spectrum(double L, double omega,
                                                const GridSpec& grid);
void clear_spectrum_cache();

// b(tau) = (sum_k e^{-tau e2d_k}) * (sum_m e^{-tau e1d_m}); the 1D sum is
// extended until its relative tail is below 1e-16 (unless e1d_count pins it).
double trace_heat(const Spectrum& spec, double tau, Exec exec = Exec::parallel);
// log b(tau), evaluated with the ground-state Boltzmann factor split off so
// large tau cannot underflow.
double log_trace_heat(const Spectrum& spec, double tau, Exec exec = Exec::parallel);

// e2d[0] + pi^2/(2 L^2); >= omega/2 - discretization_tolerance by min-max.
double ground_energy(const Spectrum& spec);

// Flat text format: header "L omega n gauge", then one 2D eigenvalue per
// line at 17 significant digits (round-trip exact to 1e-15 relative).
void write_spectrum(std::ostream& os, const Spectrum& spec);
Spectrum read_spectrum(std::istream& is);

}  // namespace bosegas

#endif
