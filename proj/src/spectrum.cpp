#include "bosegas/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "bosegas/errors.hpp"

namespace bosegas {

namespace {

constexpr double kPi = std::numbers::pi;

std::string cache_key(double L, double omega, const GridSpec& grid) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "L%.17g_w%.17g_n%d_%s", L, omega, grid.n,
                to_string(grid.gauge));
  return buf;
}

std::mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const Spectrum>> g_cache;

const char* cache_dir() { return std::getenv("BOSEGAS_CACHE_DIR"); }

}  // namespace

void GasParams::validate() const {
  if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
  if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
  if (!(omega > 0.0)) throw ConfigError("omega must be > 0");
  if (!(L >= 1.0)) throw ConfigError("L must be >= 1");
}

const char* to_string(Gauge g) {
  return g == Gauge::symmetric ? "symmetric" : "landau";
}

Gauge gauge_from_string(const std::string& s) {
  if (s == "symmetric") return Gauge::symmetric;
  if (s == "landau") return Gauge::landau;
  throw ConfigError("unknown gauge: " + s);
}

std::vector<double> eigs_2d_magnetic(double L, double omega, const GridSpec& grid) {
  if (grid.n < 8) throw std::domain_error("eigs_2d_magnetic: grid.n must be >= 8");
  if (!(L > 0.0) || !(omega >= 0.0))
    throw std::domain_error("eigs_2d_magnetic: need L > 0 and omega >= 0");
  const int n = grid.n;
  const double h = L / (n + 1);
  if (omega * h * h > kPi)
    throw std::domain_error("eigs_2d_magnetic: flux per plaquette exceeds pi");

  const int dim = n * n;
  const double hop = 1.0 / (2.0 * h * h);
  std::vector<std::complex<double>> A(static_cast<size_t>(dim) * dim);
  auto at = [&](int r, int c) -> std::complex<double>& {
    return A[static_cast<size_t>(c) * dim + r];
  };
  auto coord = [&](int i) { return -0.5 * L + (i + 1) * h; };

  // Link phase U = exp(-i omega int a.dl) along the straight edge; a is
  // linear, so the midpoint value integrates the edge exactly.
  for (int iy = 0; iy < n; ++iy) {
    const double y = coord(iy);
    for (int ix = 0; ix < n; ++ix) {
      const double x = coord(ix);
      const int s = iy * n + ix;
      at(s, s) = 4.0 * hop;
      if (ix + 1 < n) {
        // a_x = -y/2 (symmetric) or -y (landau) along the x-edge
        const double ax = grid.gauge == Gauge::symmetric ? -0.5 * y : -y;
        const std::complex<double> u = std::polar(1.0, -omega * ax * h);
        at(s, s + 1) = -hop * u;
        at(s + 1, s) = -hop * std::conj(u);
      }
      if (iy + 1 < n) {
        // a_y = x/2 (symmetric) or 0 (landau) along the y-edge
        const double ay = grid.gauge == Gauge::symmetric ? 0.5 * x : 0.0;
        const std::complex<double> u = std::polar(1.0, -omega * ay * h);
        at(s, s + n) = -hop * u;
        at(s + n, s) = -hop * std::conj(u);
      }
    }
  }

  std::vector<double> w(dim);
  const int info = LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'U', dim, A.data(), dim,
                                 w.data());
  if (info != 0)
    throw NumericalError("eigs_2d_magnetic: zheev failed to converge",
                         static_cast<double>(info));
  return w;  // zheev returns ascending order
}

double e1d_mode(double L, int m) {
  return kPi * kPi * static_cast<double>(m) * m / (2.0 * L * L);
}

std::vector<double> eigs_1d(double L, int count) {
  if (count < 1) throw std::domain_error("eigs_1d: count must be >= 1");
  std::vector<double> e(count);
  for (int m = 1; m <= count; ++m) e[m - 1] = e1d_mode(L, m);
  return e;
}

Spectrum make_spectrum(double L, double omega, const GridSpec& grid) {
  Spectrum s;
  s.e2d = eigs_2d_magnetic(L, omega, grid);
  s.L = L;
  s.omega = omega;
  s.grid = grid;
  return s;
}

std::shared_ptr<const Spectrum> cached_spectrum(double L, double omega,
                                                const GridSpec& grid) {
  const std::string key = cache_key(L, omega, grid);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }

  std::shared_ptr<const Spectrum> spec;
  if (const char* dir = cache_dir()) {
    const std::filesystem::path path = std::filesystem::path(dir) / (key + ".txt");
    std::ifstream in(path);
    if (in) {
      auto loaded = std::make_shared<Spectrum>(read_spectrum(in));
      if (loaded->L == L && loaded->omega == omega && loaded->grid.n == grid.n &&
          loaded->grid.gauge == grid.gauge)
        spec = loaded;
    }
  }
  if (!spec) {
    spec = std::make_shared<Spectrum>(make_spectrum(L, omega, grid));
    if (const char* dir = cache_dir()) {
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      const std::filesystem::path path =
          std::filesystem::path(dir) / (key + ".txt");
      const std::filesystem::path tmp =
          std::filesystem::path(dir) / (key + ".tmp");
      std::ofstream out(tmp);
      if (out) {
        write_spectrum(out, *spec);
        out.close();
        std::filesystem::rename(tmp, path, ec);
      }
    }
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(key, spec);
  return it->second;
}

void clear_spectrum_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

namespace {

double sum_exp_shifted_serial(const std::vector<double>& e, double tau, double e0) {
  double s = 0.0;
  for (double v : e) s += std::exp(-tau * (v - e0));
  return s;
}

double sum_exp_shifted_parallel(const std::vector<double>& e, double tau, double e0) {
  const auto n = static_cast<std::ptrdiff_t>(e.size());
  std::vector<double> partial(omp_get_max_threads(), 0.0);
#pragma omp parallel
  {
    double acc = 0.0;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) acc += std::exp(-tau * (e[i] - e0));
    partial[omp_get_thread_num()] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;  // fixed combine order
  return total;
}

// 1D Dirichlet theta sum with the m=1 term split off; stops once the
// relative tail is below 1e-16 (terms decay super-exponentially).
double theta_1d_shifted(const Spectrum& spec, double tau) {
  const double e1 = e1d_mode(spec.L, 1);
  if (spec.e1d_count > 0) {
    double s = 0.0;
    for (int m = 1; m <= spec.e1d_count; ++m)
      s += std::exp(-tau * (e1d_mode(spec.L, m) - e1));
    return s;
  }
  double s = 0.0;
  for (int m = 1; m <= 100000; ++m) {
    const double term = std::exp(-tau * (e1d_mode(spec.L, m) - e1));
    s += term;
    if (term <= 1e-16 * s) break;
  }
  return s;
}

}  // namespace

double log_trace_heat(const Spectrum& spec, double tau, Exec exec) {
  if (!(tau > 0.0)) throw std::domain_error("trace_heat: tau must be > 0");
  if (spec.e2d.empty()) throw std::domain_error("trace_heat: empty spectrum");
  const double e2d0 = spec.e2d.front();
  const double s2 = exec == Exec::serial
                        ? sum_exp_shifted_serial(spec.e2d, tau, e2d0)
                        : sum_exp_shifted_parallel(spec.e2d, tau, e2d0);
  const double s1 = theta_1d_shifted(spec, tau);
  const double e0 = e2d0 + e1d_mode(spec.L, 1);
  return -tau * e0 + std::log(s2) + std::log(s1);
}

double trace_heat(const Spectrum& spec, double tau, Exec exec) {
  return std::exp(log_trace_heat(spec, tau, exec));
}

double ground_energy(const Spectrum& spec) {
  if (spec.e2d.empty()) throw std::domain_error("ground_energy: empty spectrum");
  return spec.e2d.front() + e1d_mode(spec.L, 1);
}

void write_spectrum(std::ostream& os, const Spectrum& spec) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g %.17g %d %s\n", spec.L, spec.omega,
                spec.grid.n, to_string(spec.grid.gauge));
  os << buf;
  for (double e : spec.e2d) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", e);
    os << buf;
  }
}

Spectrum read_spectrum(std::istream& is) {
  Spectrum spec;
  std::string gauge;
  if (!(is >> spec.L >> spec.omega >> spec.grid.n >> gauge))
    throw std::runtime_error("read_spectrum: malformed header");
  spec.grid.gauge = gauge_from_string(gauge);
  spec.e2d.reserve(static_cast<size_t>(spec.grid.n) * spec.grid.n);
  double e;
  while (is >> e) spec.e2d.push_back(e);
  if (spec.e2d.size() != static_cast<size_t>(spec.grid.n) * spec.grid.n)
    throw std::runtime_error("read_spectrum: eigenvalue count does not match n^2");
  if (!std::is_sorted(spec.e2d.begin(), spec.e2d.end()))
    throw std::runtime_error("read_spectrum: eigenvalues not sorted");
  return spec;
}

}  // namespace bosegas
