#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hardylab/carleson.hpp"
#include "hardylab/counting.hpp"
#include "hardylab/criteria.hpp"
#include "hardylab/json_io.hpp"
#include "hardylab/operator_lab.hpp"
#include "hardylab/polytorus.hpp"

using namespace hardylab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

struct RunConfig {
  std::string symbol_file;
  std::string inline_spec;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t nbasis = 64;
  std::size_t ntrunc = 4096;
  std::string grid = "0.5,2,-1,1,32,32";
};

struct Loaded {
  json spec;
  Symbol symbol;
};

Loaded load_symbol(const RunConfig& rc) {
  if (rc.symbol_file.empty() == rc.inline_spec.empty()) {
    throw SpecError("exactly one of --symbol FILE or --inline JSON is required");
  }
  json spec;
  if (!rc.inline_spec.empty()) {
    try {
      spec = json::parse(rc.inline_spec);
    } catch (const json::exception& e) {
      throw SpecError(std::string("--inline: ") + e.what());
    }
  } else {
    std::ifstream in(rc.symbol_file);
    if (!in) throw SpecError("cannot open symbol file '" + rc.symbol_file + "'");
    try {
      in >> spec;
    } catch (const json::exception& e) {
      throw SpecError("symbol file '" + rc.symbol_file + "': " + e.what());
    }
  }
  return {spec, symbol_from_json(spec)};
}

json resolved_config(const RunConfig& rc, const std::string& command, const std::vector<std::string>& args,
                     const json& spec) {
  return {{"command", command}, {"args", args},     {"symbol", spec},     {"seed", rc.seed},
          {"nbasis", rc.nbasis}, {"ntrunc", rc.ntrunc}, {"grid", rc.grid}};
}

void emit(const RunConfig& rc, const std::string& text, bool stdout_fallback = true) {
  if (rc.out.empty()) {
    if (stdout_fallback) std::cout << text;
    return;
  }
  std::ofstream f(rc.out);
  if (!f) throw SpecError("cannot write '" + rc.out + "'");
  f << text;
}

double parse_number(const std::vector<std::string>& args, std::size_t i, const char* what) {
  if (i >= args.size()) throw SpecError(std::string("missing argument: ") + what);
  try {
    std::size_t used = 0;
    const double v = std::stod(args[i], &used);
    if (used != args[i].size()) throw std::invalid_argument(args[i]);
    return v;
  } catch (const std::exception&) {
    throw SpecError(std::string("argument '") + args[i] + "' is not a number (" + what + ")");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw SpecError("list entry '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw SpecError("empty list");
  return out;
}

int exit_for(Verdict v) { return v == Verdict::Inconclusive ? kExitInconclusive : kExitOk; }

std::string fmt(double x, int prec = 6) {
  std::ostringstream os;
  os << std::setprecision(prec) << x;
  return os.str();
}

// random points of the symbol's range box, away from Re w = 1/2 and phi(+inf)
std::vector<cplx> random_points(const Symbol& sym, int count, std::uint64_t seed) {
  const auto box = sym.range_box(4.0);
  if (!box) throw PreconditionError("symbol has no bounded range box");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(std::max(box->re_min, 0.5) + 1e-3, box->re_max);
  std::uniform_real_distribution<double> uy(box->im_min, box->im_max);
  std::vector<cplx> out;
  while (static_cast<int>(out.size()) < count) {
    const cplx w(ux(rng), uy(rng));
    if (std::abs(w - sym.phi_at_infinity()) > 1e-3) out.push_back(w);
  }
  return out;
}

int cmd_validate(const RunConfig& rc) {
  const Loaded l = load_symbol(rc);
  const ValidationReport& r = l.symbol.report();
  std::cout << r.branch << ", margin " << fmt(r.margin) << "\n";
  if (!rc.out.empty()) {
    json doc{{"config", resolved_config(rc, "validate", {}, l.spec)}, {"result", to_json(r)}};
    emit(rc, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_heatmap(const RunConfig& rc, bool force_strip) {
  const Loaded l = load_symbol(rc);
  const GridSpec grid = GridSpec::parse(rc.grid);
  const auto samples = counting_heatmap(l.symbol, grid, force_strip);
  std::ostringstream os;
  os << "# config: " << resolved_config(rc, "heatmap", {force_strip ? "strip" : "auto"}, l.spec).dump() << "\n";
  os << "re,im,M,method,err_est,converged\n";
  os << std::setprecision(12);
  for (const CountingSample& s : samples) {
    os << s.w.real() << "," << s.w.imag() << "," << s.value << "," << to_string(s.method) << "," << s.err_est << ","
       << (s.converged ? 1 : 0) << "\n";
  }
  emit(rc, os.str());
  return kExitOk;
}

int cmd_schatten(const RunConfig& rc, const std::string& plist) {
  const Loaded l = load_symbol(rc);
  const std::vector<double> ps = parse_list(plist);
  const SchattenReport rep = singular_values(build_matrix(l.symbol, rc.nbasis, rc.ntrunc), ps);
  json doc{{"config", resolved_config(rc, "schatten", {plist}, l.spec)}, {"result", to_json(rep)}};
  emit(rc, doc.dump(2) + "\n");
  return kExitOk;
}

struct Row {
  std::string check, label;
  double lhs, rhs, slack;
  bool pass;
};

int cmd_verify(const RunConfig& rc, const std::string& check, const std::string& f_spec) {
  const Loaded l = load_symbol(rc);
  const Symbol& sym = l.symbol;
  std::vector<Row> rows;
  if (check == "stanton" || check == "hs") {
    IdentityCheck c;
    if (check == "stanton") {
      DirichletSeries f(1);
      for (double idx : parse_list(f_spec)) {
        const auto n = static_cast<std::size_t>(idx);
        if (n < 1 || static_cast<double>(n) != idx) throw SpecError("--f: indices must be positive integers");
        if (n > f.size()) f = f.resized(n);
        f[n] += 1.0;
      }
      c = stanton_check(sym, f, {}, rc.ntrunc);
    } else {
      c = hs_identity_check(sym, rc.nbasis, {}, rc.ntrunc);
    }
    rows.push_back({check, check == "stanton" ? "f=" + f_spec : "N=" + std::to_string(rc.nbasis), c.lhs, c.rhs, c.gap,
                    c.gap <= 1e-3});
  } else if (check == "littlewood") {
    for (const cplx& w : random_points(sym, 20, rc.seed)) {
      const double m = counting_value(sym, w);
      const double b = littlewood_bound(sym, w);
      rows.push_back({check, "w=" + fmt(w.real()) + "+" + fmt(w.imag()) + "i", m, b, b - m, m <= b + 1e-9});
    }
  } else if (check == "lindelof") {
    for (const cplx& w : random_points(sym, 5, rc.seed)) {
      const LindelofResult r = lindelof_check(sym, w, cplx(1.0, 0.0));
      rows.push_back({check, "w=" + fmt(w.real()) + "+" + fmt(w.imag()) + "i", r.lhs, r.rhs, r.rhs - r.lhs, r.holds(1e-8)});
    }
  } else if (check == "submean") {
    for (const cplx& w : random_points(sym, 5, rc.seed)) {
      const double r = 0.5 * (w.real() - 0.5);
      const double d = std::abs(w - sym.phi_at_infinity());
      if (d <= r) continue;
      const SubmeanResult s = submean_check(sym, w, r);
      rows.push_back({check, "w=" + fmt(w.real()) + "+" + fmt(w.imag()) + "i", s.center, s.average,
                      s.average - s.center, s.center <= s.average + s.quad_err + 1e-9});
    }
  } else {
    throw SpecError("verify: unknown check '" + check + "' (stanton|hs|littlewood|lindelof|submean)");
  }
  bool all = true;
  json doc_rows = json::array();
  std::cout << std::left << std::setw(11) << "check" << std::setw(28) << "case" << std::setw(16) << "lhs" << std::setw(16)
            << "rhs" << std::setw(14) << "gap/slack" << "result\n";
  for (const Row& r : rows) {
    std::cout << std::left << std::setw(11) << r.check << std::setw(28) << r.label << std::setw(16) << fmt(r.lhs, 10)
              << std::setw(16) << fmt(r.rhs, 10) << std::setw(14) << fmt(r.slack, 4) << (r.pass ? "pass" : "FAIL") << "\n";
    all = all && r.pass;
    doc_rows.push_back({{"check", r.check}, {"case", r.label}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"slack", r.slack},
                        {"pass", r.pass}});
  }
  if (!rc.out.empty()) {
    json doc{{"config", resolved_config(rc, "verify", {check, f_spec}, l.spec)}, {"result", doc_rows}};
    emit(rc, doc.dump(2) + "\n");
  }
  if (!all) {
    std::cerr << "verify: " << check << " failed\n";
    return kExitError;
  }
  return kExitOk;
}

int cmd_criteria(const RunConfig& rc, const std::vector<std::string>& args) {
  if (args.empty()) throw SpecError("criteria: expected one of lz p | s2m m | weighted p a | bergman p a");
  const Loaded l = load_symbol(rc);
  std::vector<CriterionReport> reps;
  const std::string& kind = args[0];
  if (kind == "lz") {
    reps.push_back(luecking_zhu(l.symbol, parse_number(args, 1, "p")));
  } else if (kind == "s2m") {
    S2mConfig cfg;
    cfg.seed = rc.seed;
    reps.push_back(multi_integral_s2m(l.symbol, static_cast<int>(parse_number(args, 1, "m")), cfg));
  } else if (kind == "weighted") {
    auto pr = weighted_carleson_criterion(l.symbol, parse_number(args, 1, "p"), parse_number(args, 2, "a"));
    reps.push_back(pr.first);
    reps.push_back(pr.second);
  } else if (kind == "bergman") {
    reps.push_back(bergman_criterion(l.symbol, parse_number(args, 1, "p"), parse_number(args, 2, "a")));
  } else {
    throw SpecError("criteria: unknown kind '" + kind + "'");
  }
  int code = kExitOk;
  json out = json::array();
  for (const CriterionReport& r : reps) {
    std::cout << std::left << std::setw(30) << r.name << std::setw(18) << fmt(r.value, 10) << to_string(r.verdict) << "\n";
    out.push_back(to_json(r));
    if (exit_for(r.verdict) == kExitInconclusive) code = kExitInconclusive;
  }
  if (!rc.out.empty()) {
    json doc{{"config", resolved_config(rc, "criteria", args, l.spec)}, {"result", out}};
    emit(rc, doc.dump(2) + "\n");
  }
  return code;
}

int cmd_carleson(const RunConfig& rc, const std::vector<std::string>& args) {
  if (args.empty()) throw SpecError("carleson: expected schur n | box n");
  const int n = args.size() > 1 ? static_cast<int>(parse_number(args, 1, "n")) : 30;
  json result;
  if (args[0] == "schur") {
    const SchurDemo d = carleson_schur_demo(n);
    std::cout << "i  row_sum\n";
    for (std::size_t i = 0; i < d.row_sums.size(); ++i) std::cout << i + 1 << "  " << fmt(d.row_sums[i], 10) << "\n";
    std::cout << "sup row sum " << fmt(d.sup, 12) << "\n";
    std::cout << "ratio bound b " << fmt(d.b) << " from i0 = " << d.i0 << ", decay constant " << fmt(d.decay_constant)
              << "\n";
    result = {{"n_max", n}, {"row_sums", d.row_sums}, {"sup", d.sup}, {"i0", d.i0}, {"b", d.b},
              {"decay_constant", d.decay_constant}};
  } else if (args[0] == "box") {
    std::vector<WeightedPoint> mu;
    for (int k = 1; k <= n; ++k) {
      const cplx s = carleson_point(k);
      mu.push_back({s, s.real() - 0.5});
    }
    const BoxConstant b = carleson_box_constant(mu);
    std::cout << "n  mu(Q_n)/|I_n|\n";
    for (std::size_t i = 0; i < b.aligned.size(); ++i) std::cout << i + 1 << "  " << fmt(b.aligned[i], 17) << "\n";
    std::cout << "box constant " << fmt(b.sup, 12) << "\n";
    result = {{"n_max", n}, {"aligned", b.aligned}, {"sup", b.sup}};
  } else {
    throw SpecError("carleson: unknown kind '" + args[0] + "'");
  }
  if (!rc.out.empty()) {
    json doc{{"config", resolved_config(rc, "carleson", args, nullptr)}, {"result", result}};
    emit(rc, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_polytorus(const RunConfig& rc, const std::vector<std::string>& args, std::size_t samples) {
  if (args.empty()) throw SpecError("polytorus: expected boundary | s2m m | hp p");
  const Loaded l = load_symbol(rc);
  McConfig cfg;
  cfg.seed = rc.seed;
  cfg.n_samples = samples;
  json result;
  if (args[0] == "boundary") {
    const auto vals = sample_boundary_values(l.symbol, cfg);
    double min_re = std::numeric_limits<double>::infinity();
    cplx mean = 0.0;
    for (const cplx& v : vals) {
      min_re = std::min(min_re, v.real());
      mean += v;
    }
    mean /= static_cast<double>(vals.size());
    result = {{"n_samples", vals.size()}, {"seed", rc.seed}, {"min_re", min_re}, {"mean", complex_to_json(mean)}};
  } else if (args[0] == "s2m") {
    result = to_json(mc_schatten_boundary(l.symbol, static_cast<int>(parse_number(args, 1, "m")), cfg));
  } else if (args[0] == "hp") {
    result = to_json(hp_norm_mc(l.symbol.stored_series(), parse_number(args, 1, "p"), cfg));
  } else {
    throw SpecError("polytorus: unknown kind '" + args[0] + "'");
  }
  json doc{{"config", resolved_config(rc, "polytorus", args, l.spec)}, {"result", result}};
  doc["config"]["samples"] = samples;
  emit(rc, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardylab: composition operators on Hardy spaces of Dirichlet series"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--symbol", rc.symbol_file, "symbol spec JSON file");
  app.add_option("--inline", rc.inline_spec, "symbol spec as inline JSON");
  app.add_option("--out", rc.out, "output path");
  app.add_option("--seed", rc.seed, "random seed");
  app.add_option("--nbasis", rc.nbasis, "basis size");
  app.add_option("--ntrunc", rc.ntrunc, "column truncation");
  app.add_option("--grid", rc.grid, "reMin,reMax,imMin,imMax,nx,ny");

  auto* validate = app.add_subcommand("validate", "class membership report");
  auto* heatmap = app.add_subcommand("heatmap", "counting function on a grid (CSV)");
  bool force_strip = false;
  heatmap->add_flag("--strip", force_strip, "force strip enumeration");
  auto* schatten = app.add_subcommand("schatten", "singular values and Schatten norms (JSON)");
  std::string plist = "1,2,4";
  schatten->add_option("--p", plist, "comma-separated exponents");
  auto* verify = app.add_subcommand("verify", "identity and inequality checks");
  std::string check;
  std::string f_spec = "2";
  verify->add_option("check", check, "stanton|hs|littlewood|lindelof|submean")->required();
  verify->add_option("--f", f_spec, "test function as monomial indices, e.g. 2,3");
  auto* criteria = app.add_subcommand("criteria", "Schatten-class integral criteria");
  std::vector<std::string> crit_args;
  criteria->add_option("args", crit_args, "lz p | s2m m | weighted p a | bergman p a")->required();
  auto* carleson = app.add_subcommand("carleson", "Carleson measure constructions");
  std::vector<std::string> carl_args;
  carleson->add_option("args", carl_args, "schur n | box n")->required();
  auto* polytorus = app.add_subcommand("polytorus", "Monte Carlo over the polytorus");
  std::vector<std::string> poly_args;
  std::size_t samples = 10000;
  polytorus->add_option("args", poly_args, "boundary | s2m m | hp p")->required();
  polytorus->add_option("--samples", samples, "number of sampled characters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(rc);
    if (*heatmap) return cmd_heatmap(rc, force_strip);
    if (*schatten) return cmd_schatten(rc, plist);
    if (*verify) return cmd_verify(rc, check, f_spec);
    if (*criteria) return cmd_criteria(rc, crit_args);
    if (*carleson) return cmd_carleson(rc, carl_args);
    if (*polytorus) return cmd_polytorus(rc, poly_args, samples);
  } catch (const SpecError& e) {
    std::cerr << "error: malformed spec: " << e.what() << "\n";
  } catch (const ClassViolation& e) {
    std::cerr << "error: class violation: " << e.what() << " (witness s = " << e.witness().real() << " + "
              << e.witness().imag() << "i)\n";
  } catch (const NonConvergence& e) {
    std::cerr << "error: numeric non-convergence: " << e.what() << "\n";
  } catch (const BoundaryHazard& e) {
    std::cerr << "error: numeric non-convergence (boundary hazard): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
