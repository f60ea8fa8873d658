#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hardylab/polynomial.hpp"
#include "hardylab/symbol.hpp"

using namespace hardylab;

TEST_SUITE("symbols") {

TEST_CASE("affine symbol: margin, series and evaluation") {
  const Symbol s = make_affine(1.0, 0.25);
  CHECK(s.validated());
  CHECK(s.report().branch == "G0");
  CHECK(s.margin() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s.phi_at_infinity() == cplx(1.0, 0.0));
  const DirichletSeries phi = s.phi_series(8);
  CHECK(phi[2] == cplx(0.25, 0.0));
  CHECK(phi[3] == cplx(0.0, 0.0));
  const cplx z(0.7, -2.0);
  CHECK(std::abs(s.phi(z) - (1.0 + 0.25 * std::pow(2.0, -z))) < 1e-14);
  CHECK(std::abs(s.psi(z) - s.phi(z)) < 1e-15);
}

TEST_CASE("class violation carries a witness on the boundary") {
  try {
    make_affine(0.6, 0.25);
    FAIL("expected ClassViolation");
  } catch (const ClassViolation& e) {
    const Symbol probe(0, [] {
      DirichletSeries f(2);
      f[1] = 0.6;
      f[2] = 0.25;
      return f;
    }(), GenericDesc{});
    CHECK(probe.phi(e.witness()).real() < 0.5);
  }
  CHECK_THROWS_AS(make_constant(cplx(0.5, 1.0)), ClassViolation);
}

TEST_CASE("boundary-touching affine symbol is accepted with zero margin") {
  const Symbol s = make_affine(0.75, 0.25);
  CHECK(s.validated());
  CHECK(std::abs(s.margin()) < 1e-12);
}

TEST_CASE("disk lift validation agrees with the boundary minimum") {
  Polynomial p({1.0, 0.25, 0.125});
  const Symbol s = make_disk_lift(p);
  // Re Phi on the circle: 1 + cos(t)/4 + cos(2t)/8, minimum on a fine grid
  double m = 1e9;
  for (int j = 0; j < 200000; ++j) {
    const double t = 2 * std::numbers::pi * j / 200000.0;
    m = std::min(m, 1.0 + std::cos(t) / 4 + std::cos(2 * t) / 8);
  }
  CHECK(s.report().inf_re == doctest::Approx(m).epsilon(1e-9));
  CHECK(s.report().certified_margin <= s.margin());
  CHECK_THROWS_AS(make_disk_lift(Polynomial({0.6, 0.0, 0.2})), ClassViolation);
}

TEST_CASE("generic symbols with c0 >= 1") {
  DirichletSeries phi(3);
  phi[1] = 0.5;
  phi[3] = 0.2;
  const Symbol s = make_generic(1, phi);
  CHECK(s.report().branch == "G1");
  CHECK(s.margin() == doctest::Approx(0.3).epsilon(1e-6));
  DirichletSeries bad(2);
  bad[1] = 0.1;
  bad[2] = 0.3;
  CHECK_THROWS_AS(make_generic(1, bad), ClassViolation);
  DirichletSeries shift(1);
  shift[1] = cplx(0.0, 2.0);
  CHECK(make_generic(1, shift).report().branch == "imaginary-constant");
}

TEST_CASE("generic symbols over two primes use the torus grid") {
  DirichletSeries phi(6);
  phi[1] = 1.0;
  phi[2] = 0.2;
  phi[3] = 0.15;
  phi[6] = 0.05;
  const Symbol s = make_generic(0, phi);
  CHECK(s.report().method == "torus-grid");
  CHECK(s.margin() == doctest::Approx(0.2).epsilon(1e-6));
}

TEST_CASE("sector lift") {
  const Symbol s = make_sector_lift(2.0, 32);
  CHECK(s.validated());
  CHECK(s.phi_at_infinity().real() == doctest::Approx(1.5).epsilon(1e-12));
  const auto& d = std::get<SectorLiftDesc>(s.descriptor());
  CHECK(d.rho > 0.5);
  CHECK(d.half_angle < std::numbers::pi / 4);
  // the exact map sends the disk into the sector and 0 to 3/2
  CHECK(std::abs(sector_map(2.0, 0.0) - 1.5) < 1e-15);
  for (double t : {0.1, 1.0, 2.5, 3.0}) {
    const cplx w = sector_map(2.0, std::polar(0.999, t));
    CHECK(std::abs(std::arg(w - 0.5)) < std::numbers::pi / 4 + 1e-12);
  }
  // Taylor coefficients reproduce the map inside the disk
  const auto tay = sector_taylor(0.5, 40);
  const cplx z(0.2, -0.3);
  cplx acc = 0.0;
  for (int k = 40; k >= 0; --k) acc = acc * z + tay[k];
  CHECK(std::abs(0.5 + acc - sector_map(2.0, z)) < 1e-12);
  const cplx h = 1e-6;
  CHECK(std::abs((sector_map(2.0, z + h) - sector_map(2.0, z - h)) / (2.0 * h) - sector_map_deriv(2.0, z)) < 1e-7);
  CHECK_THROWS_AS(make_sector_lift(1.0), PreconditionError);
}

TEST_CASE("polynomial roots") {
  const Polynomial p({1.0, -3.0, 0.0, 1.0});  // z^3 - 3z + 1
  const auto r = solve_polynomial(p, 0.0);
  REQUIRE(r.size() == 3);
  for (cplx z : r) CHECK(std::abs(p(z)) < 1e-12);
  const Polynomial q({0.0, 0.0, 1.0});
  const auto dbl = solve_polynomial(q, 0.25);
  REQUIRE(dbl.size() == 2);
  CHECK(std::abs(dbl[0] + dbl[1]) < 1e-15);
  CHECK(p.lipschitz_unit_disk() == doctest::Approx(6.0));
}

TEST_CASE("range boxes") {
  const auto b = make_affine(1.0, 0.25).range_box();
  REQUIRE(b.has_value());
  CHECK(b->re_min <= 0.75);
  CHECK(b->re_max >= 1.25);
  CHECK(b->im_max >= 0.25);
  const auto sb = make_sector_lift(2.0).range_box(10.0);
  REQUIRE(sb.has_value());
  CHECK(sb->sector_angle == doctest::Approx(std::numbers::pi / 4));
}

}
