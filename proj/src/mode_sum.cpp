#include "bosegas/mode_sum.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include <omp.h>

namespace bosegas {

namespace {

using cplx = std::complex<double>;

// Pairs deeper than ln(1e18)/beta above the ground energy are dropped.
constexpr double kLogCut = 41.446531673892822;  // -ln(1e-18)

template <class T, class F>
T ordered_partial_sum(std::ptrdiff_t n, const F& term) {
  std::vector<T> partial(omp_get_max_threads(), T{});
#pragma omp parallel
  {
    T acc{};
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) acc += term(i);
    partial[omp_get_thread_num()] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;  // fixed combine order
  return total;
}

}  // namespace

ModeSum build_mode_sum(const Spectrum& spec, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("build_mode_sum: beta must be > 0");
  if (spec.e2d.empty()) throw std::domain_error("build_mode_sum: empty spectrum");
  ModeSum ms;
  ms.beta = beta;
  ms.volume = spec.L * spec.L * spec.L;
  ms.e_min = spec.e2d.front() + e1d_mode(spec.L, 1);
  const double e_cut = ms.e_min + kLogCut / beta;

  ms.boltz.reserve(spec.e2d.size() * 4);
  for (double e2 : spec.e2d) {
    if (e2 + e1d_mode(spec.L, 1) > e_cut) break;  // e2d sorted
    const int m_max = spec.e1d_count > 0 ? spec.e1d_count : 1 << 20;
    for (int m = 1; m <= m_max; ++m) {
      const double e = e2 + e1d_mode(spec.L, m);
      if (e > e_cut) break;
      ms.boltz.push_back(std::exp(-beta * e));
    }
  }
  return ms;
}

std::complex<double> log_one_minus_sum(const ModeSum& ms, std::complex<double> z,
                                       Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(ms.boltz.size());
  const double* b = ms.boltz.data();
  if (exec == Exec::serial) {
    cplx s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) s += std::log(1.0 - z * b[i]);
    return s;
  }
  return ordered_partial_sum<cplx>(n, [&](std::ptrdiff_t i) {
    return std::log(1.0 - z * b[i]);
  });
}

std::complex<double> occupation_sum(const ModeSum& ms, std::complex<double> z,
                                    Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(ms.boltz.size());
  const double* b = ms.boltz.data();
  if (exec == Exec::serial) {
    cplx s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const cplx u = z * b[i];
      s += u / (1.0 - u);
    }
    return s;
  }
  return ordered_partial_sum<cplx>(n, [&](std::ptrdiff_t i) {
    const cplx u = z * b[i];
    return u / (1.0 - u);
  });
}

double occupation_dx_sum(const ModeSum& ms, double x, Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(ms.boltz.size());
  const double* b = ms.boltz.data();
  if (exec == Exec::serial) {
    double s = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double d = 1.0 - x * b[i];
      s += b[i] / (d * d);
    }
    return s;
  }
  return ordered_partial_sum<double>(n, [&](std::ptrdiff_t i) {
    const double d = 1.0 - x * b[i];
    return b[i] / (d * d);
  });
}

}  // namespace bosegas
