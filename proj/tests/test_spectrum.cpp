#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <doctest.h>

#include "bosegas/spectrum.hpp"

using namespace bosegas;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("eigs_1d closed forms") {
  const auto a = eigs_1d(kPi, 3);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a[2] == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(eigs_1d(1.0, 1)[0] == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  const auto c = eigs_1d(2.0, 2);
  CHECK(c[0] == doctest::Approx(kPi * kPi / 8.0).epsilon(1e-15));
  CHECK(c[1] == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(eigs_1d(2.0, 0), std::domain_error);
}

TEST_CASE("2d spectrum: free limit of the square") {
  // omega -> 0: separable Dirichlet square, lowest level pi^2 (1+1) / (2 L^2).
  const double L = kPi * std::sqrt(2.0);
  const auto e = eigs_2d_magnetic(L, 1e-9, GridSpec{48, Gauge::symmetric});
  CHECK(e.front() == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("2d spectrum: gauge invariance") {
  const auto sym = eigs_2d_magnetic(6.0, 1.0, GridSpec{20, Gauge::symmetric});
  const auto lan = eigs_2d_magnetic(6.0, 1.0, GridSpec{20, Gauge::landau});
  REQUIRE(sym.size() == lan.size());
  for (size_t i = 0; i < sym.size(); ++i)
    CHECK(std::abs(sym[i] - lan[i]) <= 1e-9 * sym[i]);
}

TEST_CASE("2d spectrum: min-max lower bound") {
  const int n = 48;
  const auto e = eigs_2d_magnetic(8.0, 2.0, GridSpec{n, Gauge::symmetric});
  CHECK(e.front() >= 1.0 - discretization_tolerance(2.0, n));
}

TEST_CASE("2d spectrum: domain guards") {
  CHECK_THROWS_AS(eigs_2d_magnetic(6.0, 1.0, GridSpec{7, Gauge::symmetric}),
                  std::domain_error);
  // flux per plaquette omega h^2 > pi
  CHECK_THROWS_AS(eigs_2d_magnetic(10.0, 10.0, GridSpec{8, Gauge::symmetric}),
                  std::domain_error);
}

TEST_CASE("trace_heat: single pinned mode") {
  Spectrum s;
  s.L = 2.0;
  s.omega = 1.0;
  s.grid.n = 8;
  s.e2d = {0.75};
  s.e1d_count = 1;
  const double tau = 0.7;
  const double expected = std::exp(-tau * (0.75 + e1d_mode(2.0, 1)));
  CHECK(trace_heat(s, tau) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(log_trace_heat(s, tau) ==
        doctest::Approx(-tau * (0.75 + e1d_mode(2.0, 1))).epsilon(1e-14));
}

TEST_CASE("trace_heat: diamagnetic bound and omega->0 theta cube") {
  const double L = 6.0, beta = 1.0;
  const auto spec = cached_spectrum(L, 1.0, GridSpec{40, Gauge::symmetric});
  CHECK(trace_heat(*spec, beta) / (L * L * L) <=
        std::pow(2.0 * kPi * beta, -1.5));

  // omega -> 0: full trace factorizes into the cube of the exact 1D sum.
  Spectrum free_spec = make_spectrum(L, 1e-9, GridSpec{40, Gauge::symmetric});
  double theta = 0.0;
  for (int m = 1; m <= 200; ++m) theta += std::exp(-beta * e1d_mode(L, m));
  const double lhs = trace_heat(free_spec, beta);
  const double rhs = theta * theta * theta;
  CHECK(std::abs(lhs - rhs) <= 1e-2 * rhs);
}

TEST_CASE("ground_energy: free cube and refinement trend") {
  const double L = kPi;
  const auto s32 = make_spectrum(L, 1e-9, GridSpec{32, Gauge::symmetric});
  CHECK(ground_energy(s32) == doctest::Approx(1.5).epsilon(1e-3));

  // coarse-to-fine: the discrete bottom climbs toward the continuum value
  const auto s16 = make_spectrum(5.0, 1.0, GridSpec{16, Gauge::symmetric});
  const auto s32b = make_spectrum(5.0, 1.0, GridSpec{32, Gauge::symmetric});
  CHECK(ground_energy(s32b) >= ground_energy(s16) - 1e-6);
}

TEST_CASE("ground_energy monotone in omega at fixed grid") {
  double prev = -1.0;
  for (double w : {0.5, 1.0, 1.5, 2.0}) {
    const auto s = make_spectrum(5.0, w, GridSpec{16, Gauge::symmetric});
    const double e0 = ground_energy(s);
    CHECK(e0 >= prev - 1e-12);
    prev = e0;
  }
}

TEST_CASE("spectrum file round trip") {
  const auto spec = make_spectrum(3.0, 1.3, GridSpec{10, Gauge::landau});
  std::stringstream ss;
  write_spectrum(ss, spec);
  const Spectrum back = read_spectrum(ss);
  CHECK(back.L == spec.L);
  CHECK(back.omega == spec.omega);
  CHECK(back.grid.n == spec.grid.n);
  CHECK(back.grid.gauge == spec.grid.gauge);
  REQUIRE(back.e2d.size() == spec.e2d.size());
  for (size_t i = 0; i < spec.e2d.size(); ++i)
    CHECK(std::abs(back.e2d[i] - spec.e2d[i]) <= 1e-15 * std::abs(spec.e2d[i]));
}

TEST_CASE("read_spectrum rejects malformed input") {
  std::stringstream bad("3 1.3 4 landau\n1.0\n2.0\n");
  CHECK_THROWS(read_spectrum(bad));
}

TEST_CASE("spectrum cache is safe under concurrent access") {
  clear_spectrum_cache();
  std::vector<std::thread> threads;
  std::vector<double> bottoms(8, 0.0);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([t, &bottoms] {
      const double w = t % 2 == 0 ? 0.8 : 1.2;
      const auto s = cached_spectrum(4.0, w, GridSpec{12, Gauge::symmetric});
      bottoms[t] = s->e2d.front();
    });
  for (auto& th : threads) th.join();
  for (int t = 2; t < 8; ++t) CHECK(bottoms[t] == bottoms[t - 2]);
}

TEST_CASE("gas params validation") {
  GasParams p;
  CHECK_NOTHROW(p.validate());
  p.L = 0.5;
  CHECK_THROWS(p.validate());
}
