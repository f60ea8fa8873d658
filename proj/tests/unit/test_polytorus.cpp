#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardylab/polytorus.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/special_functions.hpp"

using namespace hardylab;

TEST_SUITE("polytorus") {

TEST_CASE("sampled characters are uniform on each prime") {
  std::mt19937_64 rng = batch_rng(11, 0);
  const int n = 20000;
  cplx mean2 = 0.0, mean6 = 0.0;
  std::vector<double> u;
  for (int k = 0; k < n; ++k) {
    const Character chi = sample_character(3, rng);
    mean2 += chi(2);
    mean6 += chi(6);
    u.push_back((std::arg(chi(3)) + std::numbers::pi) / (2.0 * std::numbers::pi));
    CHECK(std::abs(std::abs(chi(5)) - 1.0) < 1e-14);
  }
  CHECK(std::abs(mean2) / n < 0.03);
  CHECK(std::abs(mean6) / n < 0.03);
  std::sort(u.begin(), u.end());
  double ks = 0.0;
  for (int k = 0; k < n; ++k) ks = std::max({ks, std::abs(u[k] - double(k) / n), std::abs(u[k] - double(k + 1) / n)});
  CHECK(ks < 1.63 / std::sqrt(double(n)));
}

TEST_CASE("batch streams are distinct and reproducible") {
  CHECK(batch_rng(1, 0)() == batch_rng(1, 0)());
  CHECK(batch_rng(1, 0)() != batch_rng(1, 1)());
  CHECK(batch_rng(1, 0)() != batch_rng(2, 0)());
}

TEST_CASE("boundary values of simple symbols") {
  const Character chi = Character::from_angles({0.7, 2.1});
  const BoundaryValue c = boundary_value(make_constant(cplx(1.0, 0.5)), chi, 1e-3);
  CHECK(std::abs(c.value - cplx(1.0, 0.5)) < 1e-14);
  CHECK_FALSE(c.truncation_warning);
  const BoundaryValue a = boundary_value(make_affine(1.0, 0.25), chi, 1e-3);
  CHECK(std::abs(a.value - (1.0 + 0.25 * chi(2))) < 1e-6);
  CHECK_THROWS_AS(boundary_value(make_affine(1.0, 0.25), chi, 0.5), PreconditionError);
}

TEST_CASE("boundary values are invariant under vertical translation of the twist") {
  // phi_chi(sigma + i t) equals phi at the character chi * n^{-it}
  const Symbol s = make_disk_lift(Polynomial({1.0, 0.25, 0.125}));
  const double t = 0.37;
  const Character chi = Character::from_angles({0.3});
  const Character shifted = Character::from_angles({0.3 - t * std::log(2.0)});
  const cplx lhs = s.phi_twisted(chi, cplx(0.01, t));
  const cplx rhs = s.phi_twisted(shifted, cplx(0.01, 0.0));
  CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("H^p norms of polynomials") {
  McConfig cfg;
  cfg.n_samples = 20000;
  DirichletSeries one(1);
  one[1] = 1.0;
  CHECK(hp_norm_mc(one, 3.0, cfg).estimate == doctest::Approx(1.0).epsilon(1e-14));
  DirichletSeries two(2);
  two[2] = 1.0;
  CHECK(hp_norm_mc(two, 1.0, cfg).estimate == doctest::Approx(1.0).epsilon(1e-12));
  DirichletSeries p(2);
  p[1] = 1.0;
  p[2] = 1.0;
  const McEstimate e2 = hp_norm_mc(p, 2.0, cfg);
  CHECK(std::abs(e2.estimate - std::sqrt(2.0)) < 4.0 * e2.std_error);
  const McEstimate e1 = hp_norm_mc(p, 1.0, cfg);
  CHECK(std::abs(e1.estimate - 4.0 / std::numbers::pi) < 4.0 * e1.std_error);
  CHECK(e1.estimate < e2.estimate);
}

TEST_CASE("Parseval on random polynomials") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  McConfig cfg;
  cfg.n_samples = 20000;
  cfg.seed = 4;
  DirichletSeries f(30);
  for (std::size_t n = 1; n <= 30; ++n) f[n] = cplx(g(rng), g(rng));
  const McEstimate e = hp_norm_mc(f, 2.0, cfg);
  CHECK(std::abs(e.estimate - std::sqrt(f.l2_norm_sq())) < 4.0 * e.std_error);
}

TEST_CASE("boundary Schatten estimator") {
  McConfig cfg;
  cfg.n_samples = 2000;
  const McEstimate c = mc_schatten_boundary(make_constant(1.0), 1, cfg);
  CHECK(c.estimate == doctest::Approx(zeta(2.0)).epsilon(1e-12));
  CHECK(c.std_error < 1e-12);
  const Symbol s = make_affine(1.0, 0.25);
  const McEstimate a = mc_schatten_boundary(s, 1, cfg);
  const McEstimate b = mc_schatten_boundary(s, 1, cfg);
  CHECK(a.estimate == b.estimate);
  CHECK(a.min_re >= 0.75 - 1e-6);
  CHECK(a.truncation_warnings == 0);
  const McEstimate m2 = mc_schatten_boundary(s, 2, cfg);
  CHECK(m2.estimate > 0.0);
  CHECK_THROWS_AS(mc_schatten_boundary(s, 3, cfg), PreconditionError);
  const auto vals = sample_boundary_values(s, cfg);
  CHECK(vals.size() == cfg.n_samples);
  McConfig bad;
  bad.sigma_bv = 0.0;
  CHECK_THROWS_AS(bad.check(), PreconditionError);
}

}
