#include <doctest.h>

#include <cmath>
#include <random>

#include "hardylab/arithmetic.hpp"
#include "hardylab/character.hpp"
#include "hardylab/dirichlet_series.hpp"
#include "oracles.hpp"

using namespace hardylab;

namespace {

DirichletSeries random_series(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  DirichletSeries f(n);
  for (std::size_t k = 1; k <= n; ++k) f[k] = cplx(g(rng), g(rng)) / static_cast<double>(k);
  return f;
}

}  // namespace

TEST_SUITE("dirichlet_algebra") {

TEST_CASE("primes and factor sieve") {
  const auto p = first_primes(6);
  CHECK(p == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
  const auto spf = smallest_prime_factors(30);
  CHECK(spf[1] == 0);
  CHECK(spf[15] == 3);
  CHECK(spf[29] == 29);
  CHECK(primes_needed(1) == 0);
  CHECK(primes_needed(10) == 4);
  CHECK(primes_needed(256) == 54);
}

TEST_CASE("convolution matches the naive oracle") {
  std::mt19937_64 rng(3);
  const DirichletSeries f = random_series(60, rng);
  const DirichletSeries g = random_series(45, rng);
  const DirichletSeries h = convolve(f, g);
  const auto ref = oracle::convolve_naive(f.coeffs(), g.coeffs());
  REQUIRE(h.size() == 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(std::abs(h[n] - ref[n - 1]) < 1e-13);
}

TEST_CASE("Moebius inverts zeta exactly") {
  const std::size_t N = 512;
  const DirichletSeries mu = DirichletSeries::mobius(N);
  const auto ref = oracle::mobius_trial(N);
  for (std::size_t n = 1; n <= N; ++n) CHECK(mu[n] == cplx(ref[n], 0.0));
  const DirichletSeries e = convolve(mu, DirichletSeries::zeta_partial(N));
  for (std::size_t n = 1; n <= N; ++n) CHECK(e[n] == cplx(n == 1 ? 1.0 : 0.0, 0.0));
}

TEST_CASE("exp and log are inverse") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    DirichletSeries f = random_series(256, rng, 0.5);
    f[1] = 0.0;
    const DirichletSeries back = log_series(exp_series(f));
    double err = 0.0;
    for (std::size_t n = 1; n <= 256; ++n) err = std::max(err, std::abs(back[n] - f[n]));
    CHECK(err <= 1e-10);
  }
}

TEST_CASE("exp turns sums into products") {
  std::mt19937_64 rng(5);
  DirichletSeries f = random_series(128, rng, 0.3), g = random_series(128, rng, 0.3);
  f[1] = 0.0;
  g[1] = 0.0;
  const DirichletSeries lhs = exp_series(f + g);
  const DirichletSeries rhs = convolve(exp_series(f), exp_series(g));
  for (std::size_t n = 1; n <= 128; ++n) CHECK(std::abs(lhs[n] - rhs[n]) < 1e-12);
}

TEST_CASE("exp of -log(2) 2^{-s} is 2^{-2^{-s}}: coefficients at powers of two") {
  const double l = std::log(2.0);
  DirichletSeries f(64);
  f[2] = -l;  // exp(-l 2^{-s}) = sum_k (-l)^k/k! 2^{-ks}
  const DirichletSeries e = exp_series(f);
  double fact = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    CHECK(std::abs(e[std::size_t(1) << k] - std::pow(-l, k) / fact) < 1e-15);
  }
  CHECK(e[3] == cplx(0.0, 0.0));
}

TEST_CASE("divisor_alpha(2) equals the divisor count") {
  const DirichletSeries d = divisor_alpha(2.0, 256);
  const auto ref = oracle::divisor_count(256);
  for (std::size_t n = 1; n <= 256; ++n) CHECK(d[n] == cplx(ref[n], 0.0));
  const DirichletSeries d3 = divisor_alpha(3.0, 64);
  const DirichletSeries d3_exp = exp_series(3.0 * log_series(DirichletSeries::zeta_partial(64)));
  CHECK((d3 - d3_exp).max_abs() < 1e-11);
}

TEST_CASE("divisor_alpha at -1 and 1/2") {
  const DirichletSeries m = divisor_alpha(-1.0, 100);
  const auto ref = oracle::mobius_trial(100);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(std::abs(m[n] - cplx(ref[n], 0.0)) < 1e-13);
  const DirichletSeries h = divisor_alpha(0.5, 100);
  const DirichletSeries sq = convolve(h, h);
  for (std::size_t n = 1; n <= 100; ++n) CHECK(std::abs(sq[n] - 1.0) < 1e-12);
}

TEST_CASE("evaluation and derivative") {
  DirichletSeries f(3);
  f[1] = 1.0;
  f[2] = 2.0;
  f[3] = cplx(0.0, 1.0);
  const cplx s(1.5, 0.3);
  const cplx direct = 1.0 + 2.0 * std::pow(2.0, -s) + cplx(0.0, 1.0) * std::pow(3.0, -s);
  CHECK(std::abs(evaluate(f, s) - direct) < 1e-14);
  const cplx h = 1e-6;
  const cplx fd = (evaluate(f, s + h) - evaluate(f, s - h)) / (2.0 * h);
  CHECK(std::abs(evaluate(derivative(f), s) - fd) < 1e-8);
}

TEST_CASE("preconditions") {
  DirichletSeries f(4);
  f[1] = 1.0;
  CHECK_THROWS_AS(exp_series(f), PreconditionError);
  f[1] = 2.0;
  CHECK_THROWS_AS(log_series(f), PreconditionError);
  CHECK_THROWS_AS(DirichletSeries(2, {1.0, std::nan("")}), PreconditionError);
}

TEST_CASE("characters are completely multiplicative") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 6.28);
  const Character chi = Character::from_angles({u(rng), u(rng), u(rng), u(rng)});
  CHECK(std::abs(chi(6) - chi(2) * chi(3)) < 1e-15);
  CHECK(std::abs(chi(12) - chi(2) * chi(2) * chi(3)) < 1e-15);
  CHECK(chi(1) == cplx(1.0, 0.0));
  const auto t = chi.table(10);
  CHECK(std::abs(t[10] - chi(10)) < 1e-15);
  CHECK_THROWS_AS(chi(11), PreconditionError);
  CHECK_THROWS_AS(Character({cplx(1.1, 0.0)}), PreconditionError);
  const Character sq = chi.power(2);
  CHECK(std::abs(sq(3) - chi(3) * chi(3)) < 1e-14);
}

TEST_CASE("twist") {
  const Character chi = Character::from_angles({0.5, 1.0});
  DirichletSeries f(9);
  f[1] = 1.0;
  f[6] = 2.0;
  f[9] = 3.0;
  const DirichletSeries t = twist(f, chi);
  CHECK(std::abs(t[6] - 2.0 * chi(6)) < 1e-15);
  CHECK(std::abs(t[9] - 3.0 * chi(9)) < 1e-15);
  f[5] = 1.0;
  CHECK_THROWS_AS(twist(f, chi), PreconditionError);
}

}
