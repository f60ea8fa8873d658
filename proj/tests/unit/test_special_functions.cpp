#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/special_functions.hpp"
#include "oracles.hpp"

using namespace hardylab;

TEST_SUITE("special_functions") {

TEST_CASE("zeta at even integers") {
  const double pi = std::numbers::pi;
  CHECK(zeta(2.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(zeta(4.0) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-14));
  CHECK(zeta(1.5) == doctest::Approx(2.612375348685488).epsilon(1e-13));
}

TEST_CASE("complex zeta matches the direct sum oracle") {
  for (cplx s : {cplx(1.5, 0.0), cplx(2.0, 3.0), cplx(1.1, -7.5), cplx(1.25, 40.0), cplx(3.0, 0.5)}) {
    const cplx ref = oracle::brute_log_zeta(s, 0);
    CHECK(std::abs(zeta(s) - ref) <= 1e-9 * std::abs(ref));
  }
}

TEST_CASE("zeta'' matches the log-weighted direct sum") {
  for (cplx s : {cplx(1.5, 0.0), cplx(2.0, 1.0), cplx(1.2, -12.0), cplx(4.0, 0.0)}) {
    const cplx ref = oracle::brute_log_zeta(s, 2);
    CHECK(std::abs(zeta_deriv2(s) - ref) <= 1e-9 * std::abs(ref));
  }
  CHECK(zeta_deriv2(2.0) == doctest::Approx(oracle::brute_log_zeta(2.0, 2).real()).epsilon(1e-10));
}

TEST_CASE("zeta'' near the pole follows 2/(s-1)^3") {
  for (double e : {1e-2, 1e-3, 1e-4}) {
    const double v = zeta_deriv2(1.0 + e);
    CHECK(v * std::pow(e, 3) / 2.0 == doctest::Approx(1.0).epsilon(10 * e));
  }
}

TEST_CASE("log moments interpolate between zeta and zeta''") {
  const cplx s(2.5, 1.0);
  CHECK(std::abs(log_moment_sum(s, 0) - zeta(s)) < 1e-12);
  CHECK(std::abs(log_moment_sum(s, 1) - oracle::brute_log_zeta(s, 1)) < 1e-9);
}

TEST_CASE("partial sums") {
  CHECK(zeta_partial(2.0, 1) == 1.0);
  CHECK(zeta_partial(2.0, 3) == doctest::Approx(1.0 + 0.25 + 1.0 / 9.0));
  CHECK(zeta_deriv2_partial(2.0, 1) == 0.0);
  const double l2 = std::log(2.0);
  CHECK(zeta_deriv2_partial(2.0, 2) == doctest::Approx(l2 * l2 / 4.0));
  CHECK(zeta_partial(3.0, 100000) == doctest::Approx(zeta(3.0)).epsilon(1e-9));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(zeta(1.0), DomainError);
  CHECK_THROWS_AS(zeta(cplx(0.9, 4.0)), DomainError);
  CHECK_THROWS_AS(zeta_deriv2(0.5), DomainError);
  ZetaEvalConfig bad;
  bad.terms = 0;
  CHECK_THROWS_AS(zeta(2.0, bad), PreconditionError);
}

TEST_CASE("gamma") {
  CHECK(gamma_real(5.0) == doctest::Approx(24.0));
  CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)));
}

}
