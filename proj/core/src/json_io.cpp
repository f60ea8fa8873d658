#include "hardylab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace hardylab {

namespace {

json number(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? json("inf") : (x < 0 ? json("-inf") : json(nullptr));
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("symbol spec: missing key '") + key + "'");
  return j.at(key);
}

DirichletSeries coeffs_from_json(const json& j) {
  if (j.is_object() && j.contains("N")) return series_from_json(j);
  if (!j.is_object()) throw SpecError("symbol spec: 'coeffs' must be an object");
  std::size_t n_max = 1;
  for (const auto& [k, v] : j.items()) {
    (void)v;
    std::size_t n = 0;
    try {
      n = std::stoul(k);
    } catch (const std::exception&) {
      throw SpecError("symbol spec: coefficient index '" + k + "' is not an integer");
    }
    if (n == 0) throw SpecError("symbol spec: coefficient indices start at 1");
    n_max = std::max(n_max, n);
  }
  DirichletSeries f(n_max);
  for (const auto& [k, v] : j.items()) f[std::stoul(k)] = complex_from_json(v);
  return f;
}

}  // namespace

json complex_to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw SpecError("expected a number or a [re, im] pair, got " + j.dump());
}

json to_json(const DirichletSeries& f) {
  json re = json::array(), im = json::array();
  for (const cplx& c : f.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return {{"N", f.size()}, {"re", re}, {"im", im}};
}

DirichletSeries series_from_json(const json& j) {
  try {
    const std::size_t n = j.at("N").get<std::size_t>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size(), 0.0);
    if (n == 0 || re.size() != n || im.size() != n) throw SpecError("series: N must match the lengths of re and im");
    std::vector<cplx> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = {re[i], im[i]};
    return DirichletSeries(n, std::move(c));
  } catch (const json::exception& e) {
    throw SpecError(std::string("series: ") + e.what());
  }
}

Symbol symbol_from_json(const json& j) {
  try {
    const json& d = require(j, "descriptor");
    const std::string kind = require(d, "kind").get<std::string>();
    const int c0 = j.value("c0", 0);
    if (kind != "generic" && c0 != 0) throw SpecError("symbol spec: c0 != 0 requires kind 'generic'");
    if (kind == "affine") return make_affine(complex_from_json(require(d, "c")), complex_from_json(require(d, "r")));
    if (kind == "constant") return make_constant(complex_from_json(require(d, "c")));
    if (kind == "disk_lift") {
      Polynomial p;
      for (const json& c : require(d, "poly")) p.c.push_back(complex_from_json(c));
      return make_disk_lift(p);
    }
    if (kind == "sector_lift") return make_sector_lift(require(d, "alpha").get<double>(), d.value("order", 32));
    if (kind == "generic") return make_generic(c0, coeffs_from_json(require(j, "coeffs")));
    throw SpecError("symbol spec: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw SpecError(std::string("symbol spec: ") + e.what());
  } catch (const PreconditionError& e) {
    throw SpecError(std::string("symbol spec: ") + e.what());
  }
}

Symbol symbol_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open symbol file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SpecError("symbol file '" + path + "': " + e.what());
  }
  return symbol_from_json(j);
}

json to_json(const Symbol& s) {
  json d;
  d["kind"] = s.kind();
  if (const auto* a = std::get_if<AffineDesc>(&s.descriptor())) {
    d["c"] = complex_to_json(a->c);
    d["r"] = complex_to_json(a->r);
  } else if (const auto* p = std::get_if<DiskLiftDesc>(&s.descriptor())) {
    json poly = json::array();
    for (const cplx& c : p->poly.c) poly.push_back(complex_to_json(c));
    d["poly"] = poly;
  } else if (const auto* sec = std::get_if<SectorLiftDesc>(&s.descriptor())) {
    d["alpha"] = sec->alpha;
    d["order"] = sec->order;
    d["rho"] = sec->rho;
    d["half_angle"] = sec->half_angle;
  }
  json out{{"c0", s.c0()}, {"descriptor", d}, {"validation", to_json(s.report())}};
  if (!s.is_disk_type()) {
    json coeffs = json::object();
    const DirichletSeries& f = s.stored_series();
    for (std::size_t n = 1; n <= f.size(); ++n) {
      if (f[n] != cplx(0.0, 0.0)) coeffs[std::to_string(n)] = complex_to_json(f[n]);
    }
    out["coeffs"] = coeffs;
  }
  return out;
}

json to_json(const ValidationReport& r) {
  return {{"valid", r.valid},         {"c0", r.c0},
          {"branch", r.branch},       {"method", r.method},
          {"margin", number(r.margin)}, {"certified_margin", number(r.certified_margin)},
          {"inf_re", number(r.inf_re)}, {"witness", complex_to_json(r.witness)}};
}

json to_json(const SchattenReport& r) {
  json norms = json::object();
  for (const auto& [p, v] : r.p_norms) {
    std::ostringstream key;
    key << p;
    norms[key.str()] = number(v);
  }
  return {{"svals", r.svals},     {"p_norms", norms},         {"n_basis", r.n_basis},
          {"n_trunc", r.n_trunc}, {"tail_hint", number(r.tail_hint)}};
}

json to_json(const CriterionReport& r) {
  json trace = json::array();
  for (double v : r.refinement_trace) trace.push_back(number(v));
  json extras = json::object();
  for (const auto& [k, v] : r.extras) extras[k] = number(v);
  return {{"name", r.name},
          {"value", r.infinite ? json("inf") : number(r.value)},
          {"refinement_trace", trace},
          {"levels", r.levels},
          {"verdict", to_string(r.verdict)},
          {"std_error", number(r.std_error)},
          {"extras", extras}};
}

json to_json(const McEstimate& e) {
  return {{"estimate", number(e.estimate)},
          {"std_error", number(e.std_error)},
          {"n_samples", e.n_samples},
          {"seed", e.seed},
          {"heavy_tail_warning", e.heavy_tail_warning},
          {"truncation_warnings", e.truncation_warnings},
          {"min_re", number(e.min_re)}};
}

json to_json(const CountingSample& s) {
  return {{"w", complex_to_json(s.w)},  {"value", number(s.value)},    {"method", to_string(s.method)},
          {"T", number(s.T)},           {"sigma_min", s.sigma_min},    {"n_roots", s.n_roots},
          {"err_est", number(s.err_est)}, {"converged", s.converged},   {"weight_a", s.weight_a}};
}

json to_json(const IdentityCheck& c) {
  return {{"lhs", number(c.lhs)},           {"rhs", number(c.rhs)},           {"gap", number(c.gap)},
          {"integral", number(c.integral)}, {"quad_err", number(c.quad_err)}, {"quad_converged", c.quad_converged}};
}

json to_json(const CompactnessReport& r) {
  json ratios = json::array();
  for (double v : r.ratios) ratios.push_back(number(v));
  return {{"deltas", r.deltas}, {"ratios", ratios}, {"slope", number(r.slope)}, {"verdict", r.verdict}};
}

}  // namespace hardylab
