// Serial vs OpenMP timings for the hot kernels: mode sums behind P_L/rho_L,
// the heat-trace batch feeding the recursion, and the contour quadrature.
// Spectra are synthetic so the benchmark starts instantly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "bosegas/canonical.hpp"
#include "bosegas/grand.hpp"
#include "bosegas/mode_sum.hpp"

using bosegas::Exec;

namespace {

bosegas::Spectrum synthetic_spectrum(int n2d, double L, double omega) {
  bosegas::Spectrum s;
  s.L = L;
  s.omega = omega;
  s.grid.n = static_cast<int>(std::sqrt(n2d));
  s.e2d.resize(n2d);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> jitter(0.0, 0.05);
  for (int i = 0; i < n2d; ++i)
    s.e2d[i] = 0.5 * omega + i * (80.0 / n2d) + jitter(rng);
  std::sort(s.e2d.begin(), s.e2d.end());
  return s;
}

template <class F>
double time_best_of(int reps, const F& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void report(const char* name, double serial, double parallel, double dev) {
  std::printf("%-28s serial %9.4f ms   parallel %9.4f ms   speedup %5.2fx   max|rel dev| %.2e\n",
              name, serial * 1e3, parallel * 1e3, serial / parallel, dev);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  const double beta = 1.0;
  const bosegas::Spectrum spec = synthetic_spectrum(2304, 12.0, 1.0);
  const bosegas::ModeSum ms = bosegas::build_mode_sum(spec, beta);
  std::printf("active modes: %zu\n", ms.boltz.size());

  const std::complex<double> z = std::polar(0.9, 0.7);
  {
    std::complex<double> a, b;
    const double ts = time_best_of(5, [&] { a = log_one_minus_sum(ms, z, Exec::serial); });
    const double tp = time_best_of(5, [&] { b = log_one_minus_sum(ms, z, Exec::parallel); });
    report("log_one_minus_sum", ts, tp, std::abs(a - b) / std::abs(a));
  }
  {
    std::complex<double> a, b;
    const double ts = time_best_of(5, [&] { a = occupation_sum(ms, z, Exec::serial); });
    const double tp = time_best_of(5, [&] { b = occupation_sum(ms, z, Exec::parallel); });
    report("occupation_sum", ts, tp, std::abs(a - b) / std::abs(a));
  }
  {
    double a = 0, b = 0;
    const double ts = time_best_of(5, [&] { a = occupation_dx_sum(ms, 0.9, Exec::serial); });
    const double tp = time_best_of(5, [&] { b = occupation_dx_sum(ms, 0.9, Exec::parallel); });
    report("occupation_dx_sum", ts, tp, std::abs(a - b) / std::abs(a));
  }
  {
    const int N = 86;
    std::vector<double> a, b;
    const double ts = time_best_of(3, [&] {
      a = bosegas::partition_recursion(spec, beta, N, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      b = bosegas::partition_recursion(spec, beta, N, Exec::parallel);
    });
    double dev = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
      dev = std::max(dev, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
    report("partition_recursion", ts, tp, dev);
  }
  {
    const int N = 86;
    bosegas::ContourResult a, b;
    const double ts = time_best_of(3, [&] {
      a = bosegas::partition_contour(spec, beta, N, 0, Exec::serial);
    });
    const double tp = time_best_of(3, [&] {
      b = bosegas::partition_contour(spec, beta, N, 0, Exec::parallel);
    });
    report("partition_contour", ts, tp,
           std::abs(a.logZ - b.logZ) / std::abs(a.logZ));
  }
  return 0;
}
