#include <doctest.h>

#include <cmath>
#include <limits>

#include "hardylab/json_io.hpp"

using namespace hardylab;

TEST_SUITE("json_io") {

TEST_CASE("complex numbers and series") {
  CHECK(complex_from_json(json(2.5)) == cplx(2.5, 0.0));
  CHECK(complex_from_json(json::array({1.0, -2.0})) == cplx(1.0, -2.0));
  CHECK_THROWS_AS(complex_from_json(json("x")), SpecError);
  CHECK(complex_to_json(cplx(std::numeric_limits<double>::infinity(), 0.0))[0] == "inf");
  DirichletSeries f(3);
  f[1] = cplx(1.0, 2.0);
  f[3] = -0.5;
  const DirichletSeries g = series_from_json(to_json(f));
  CHECK((f - g).max_abs() == 0.0);
  CHECK_THROWS_AS(series_from_json(json{{"N", 2}, {"re", {1.0}}}), SpecError);
}

TEST_CASE("symbol specs round-trip") {
  const json specs[] = {
      json::parse(R"({"descriptor": {"kind": "affine", "c": [1, 0], "r": [0.25, 0]}})"),
      json::parse(R"({"descriptor": {"kind": "constant", "c": 2}})"),
      json::parse(R"({"descriptor": {"kind": "disk_lift", "poly": [1, 0.25, [0.125, 0]]}})"),
      json::parse(R"({"descriptor": {"kind": "sector_lift", "alpha": 2, "order": 24}})"),
      json::parse(R"({"c0": 1, "descriptor": {"kind": "generic"}, "coeffs": {"1": [0.5, 0], "2": [0.1, 0]}})"),
  };
  for (const json& j : specs) {
    const Symbol s = symbol_from_json(j);
    const Symbol t = symbol_from_json(to_json(s));
    CHECK(s.kind() == t.kind());
    CHECK(s.c0() == t.c0());
    for (cplx w : {cplx(0.7, 0.3), cplx(1.5, -2.0)}) CHECK(std::abs(s.psi(w) - t.psi(w)) < 1e-12);
    CHECK(to_json(s)["validation"]["valid"] == true);
  }
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(symbol_from_json(json::parse("{}")), SpecError);
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"descriptor": {"kind": "moebius"}})")), SpecError);
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"descriptor": {"kind": "affine", "c": 1}})")), SpecError);
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"descriptor": {"kind": "affine", "c": "a", "r": 1}})")),
                  SpecError);
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"c0": 1, "descriptor": {"kind": "affine", "c": 1, "r": 0.1}})")),
                  SpecError);
  CHECK_THROWS_AS(
      symbol_from_json(json::parse(R"({"descriptor": {"kind": "generic"}, "coeffs": {"0": 1}})")), SpecError);
  CHECK_THROWS_AS(symbol_from_file("/nonexistent/symbol.json"), SpecError);
}

TEST_CASE("class violations propagate") {
  CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"descriptor": {"kind": "affine", "c": 0.6, "r": 0.25}})")),
                  ClassViolation);
}

TEST_CASE("reports serialise non-finite values") {
  CriterionReport r;
  r.name = "x";
  r.infinite = true;
  r.refinement_trace = {1.0, std::numeric_limits<double>::infinity()};
  const json j = to_json(r);
  CHECK(j["value"] == "inf");
  CHECK(j["refinement_trace"][1] == "inf");
  CHECK(j["verdict"] == "inconclusive");
  IdentityCheck c;
  c.gap = std::nan("");
  CHECK(to_json(c)["gap"].is_null());
}

}
