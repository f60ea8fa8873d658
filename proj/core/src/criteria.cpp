#include "hardylab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hardylab/counting.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/special_functions.hpp"

namespace hardylab {

namespace {

CriterionReport run_ladder(const std::string& name, const Symbol& sym, const Driver& driver,
                           const CriterionConfig& cfg, double a = 0.0) {
  CriterionReport rep;
  rep.name = name;
  rep.levels = cfg.floors.empty() ? default_floor_ladder() : cfg.floors;
  double worst_err = 0.0;
  bool all_converged = true;
  for (double floor : rep.levels) {
    CubatureConfig c = cfg.cubature;
    c.re_floor = floor;
    const MeasureRule rule = build_measure_rule(sym, driver, c, a);
    rep.refinement_trace.push_back(rule.driver_value);
    worst_err = std::max(worst_err, rule.err_est);
    all_converged = all_converged && rule.converged;
  }
  rep.value = rep.refinement_trace.back();
  rep.verdict = classify_trace(rep.refinement_trace);
  rep.extras["quad_err"] = worst_err;
  rep.extras["quad_converged"] = all_converged ? 1.0 : 0.0;
  return rep;
}

double kernel_real(double sigma, std::size_t terms) {
  return terms == 0 ? zeta_deriv2(sigma) : zeta_deriv2_partial(sigma, terms);
}

cplx kernel_complex(cplx s, std::size_t terms) {
  return terms == 0 ? zeta_deriv2(s) : zeta_deriv2_partial(s, terms);
}

void check_symbol(const Symbol& sym, const char* who) {
  if (sym.c0() != 0) throw PreconditionError(std::string(who) + ": requires c0 = 0");
  if (!sym.validated()) throw PreconditionError(std::string(who) + ": symbol is not validated");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteConsistent: return "finite-consistent";
    case Verdict::DivergentConsistent: return "divergent-consistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> default_floor_ladder() {
  return {std::ldexp(1.0, -3), std::ldexp(1.0, -6), std::ldexp(1.0, -9), std::ldexp(1.0, -12)};
}

Verdict classify_trace(const std::vector<double>& trace, const std::vector<double>& noise) {
  if (trace.empty()) return Verdict::Inconclusive;
  for (double t : trace) {
    if (!std::isfinite(t)) return Verdict::Inconclusive;
  }
  if (std::all_of(trace.begin(), trace.end(), [](double t) { return t == 0.0; })) return Verdict::FiniteConsistent;
  if (trace.size() < 2) return Verdict::Inconclusive;

  bool grows = true;
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    if (!(trace[i] > 0.0) || trace[i + 1] < 2.0 * trace[i]) grows = false;
  }
  if (grows) return Verdict::DivergentConsistent;

  const double limits[] = {0.01, 0.02, 0.05};
  const std::size_t n_changes = trace.size() - 1;
  for (std::size_t k = 0; k < std::min<std::size_t>(3, n_changes); ++k) {
    const std::size_t i = n_changes - 1 - k;  // change between i and i+1
    const double denom = std::abs(trace[i + 1]);
    if (denom == 0.0) return Verdict::Inconclusive;
    double tol = limits[k];
    if (!noise.empty()) tol += 3.0 * std::hypot(noise.at(i), noise.at(i + 1)) / denom;
    if (std::abs(trace[i + 1] - trace[i]) / denom > tol) return Verdict::Inconclusive;
  }
  return Verdict::FiniteConsistent;
}

CriterionReport luecking_zhu(const Symbol& sym, double p, const CriterionConfig& cfg) {
  check_symbol(sym, "luecking_zhu");
  if (!(p > 0.0)) throw PreconditionError("luecking_zhu: p must be positive");
  const Driver driver = [p](cplx w, double m) {
    const double x = w.real() - 0.5;
    return std::pow(m, p) / std::pow(x, p + 2.0);
  };
  CriterionReport rep = run_ladder("luecking_zhu", sym, driver, cfg);
  rep.extras["p"] = p;
  return rep;
}

CriterionReport multi_integral_s2m(const MeasureRule& rule, int m, const S2mConfig& cfg) {
  if (m != 1 && m != 2) throw PreconditionError("multi_integral_s2m: m must be 1 or 2");
  CriterionReport rep;
  rep.name = "s2m";
  rep.extras["m"] = m;
  rep.extras["kernel_terms"] = static_cast<double>(cfg.kernel_terms);
  if (m == 1) {
    rep.value = rule.integrate([&](cplx w, double mm) { return kernel_real(2.0 * w.real(), cfg.kernel_terms) * mm; });
    rep.std_error = rule.err_est;
    rep.refinement_trace = {rep.value};
    rep.verdict = Verdict::FiniteConsistent;
    return rep;
  }
  if (rule.nodes.empty()) {
    rep.refinement_trace = {0.0};
    rep.verdict = Verdict::FiniteConsistent;
    return rep;
  }
  if (cfg.n_batches < 2 || cfg.n_samples < static_cast<std::size_t>(cfg.n_batches)) {
    throw PreconditionError("multi_integral_s2m: need >= 2 batches and >= 1 sample per batch");
  }
  const std::size_t n = rule.nodes.size();
  std::vector<double> a(n), shaped(n);
  double sum_a = 0.0, sum_shaped = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const QuadNode& q = rule.nodes[i];
    a[i] = q.dA * q.m;
    shaped[i] = a[i] * std::pow(q.w.real() - 0.5, -1.5);
    sum_a += a[i];
    sum_shaped += shaped[i];
  }
  std::vector<double> prob(n);
  for (std::size_t i = 0; i < n; ++i) {
    prob[i] = (1.0 - cfg.floor_weight) * shaped[i] / sum_shaped + cfg.floor_weight * a[i] / sum_a;
  }
  std::discrete_distribution<std::size_t> pick(prob.begin(), prob.end());
  // discrete_distribution normalizes internally; keep the normalized values for the weights
  const std::vector<double> q = pick.probabilities();

  const std::size_t per_batch = cfg.n_samples / static_cast<std::size_t>(cfg.n_batches);
  std::vector<double> batch_means;
  for (int b = 0; b < cfg.n_batches; ++b) {
    std::mt19937_64 rng = batch_rng(cfg.seed, static_cast<std::uint64_t>(b));
    double acc = 0.0;
    for (std::size_t k = 0; k < per_batch; ++k) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      const cplx kv = kernel_complex(std::conj(rule.nodes[i].w) + rule.nodes[j].w, cfg.kernel_terms);
      acc += std::norm(kv) * a[i] * a[j] / (q[i] * q[j]);
    }
    batch_means.push_back(acc / static_cast<double>(per_batch));
  }
  const double mean = std::accumulate(batch_means.begin(), batch_means.end(), 0.0) / batch_means.size();
  double var = 0.0;
  for (double v : batch_means) var += (v - mean) * (v - mean);
  var /= static_cast<double>(batch_means.size() - 1);
  rep.value = mean;
  rep.std_error = std::sqrt(var / static_cast<double>(batch_means.size()));
  rep.refinement_trace = {mean};
  rep.extras["n_samples"] = static_cast<double>(per_batch * batch_means.size());
  rep.extras["seed"] = static_cast<double>(cfg.seed);
  rep.verdict = (std::isfinite(rep.std_error) && rep.std_error <= 0.5 * std::abs(mean)) ? Verdict::FiniteConsistent
                                                                                          : Verdict::Inconclusive;
  return rep;
}

CriterionReport multi_integral_s2m(const Symbol& sym, int m, const S2mConfig& cfg) {
  check_symbol(sym, "multi_integral_s2m");
  if (m != 1 && m != 2) throw PreconditionError("multi_integral_s2m: m must be 1 or 2");
  const std::size_t terms = cfg.kernel_terms;
  const Driver driver = [terms](cplx w, double mm) { return kernel_real(2.0 * w.real(), terms) * mm; };
  CriterionReport rep;
  rep.name = "s2m";
  rep.levels = default_floor_ladder();
  std::vector<double> noise;
  double worst_err = 0.0;
  for (std::size_t k = 0; k < rep.levels.size(); ++k) {
    CubatureConfig c = cfg.cubature;
    c.re_floor = rep.levels[k];
    const MeasureRule rule = build_measure_rule(sym, driver, c);
    S2mConfig sub = cfg;
    sub.seed = splitmix64(cfg.seed + k);
    const CriterionReport level = multi_integral_s2m(rule, m, sub);
    rep.refinement_trace.push_back(level.value);
    noise.push_back(m == 2 ? level.std_error : 0.0);
    worst_err = std::max(worst_err, rule.err_est);
    rep.std_error = level.std_error;
    if (level.verdict == Verdict::Inconclusive) rep.extras["variance_overflow"] = 1.0;
  }
  rep.value = rep.refinement_trace.back();
  rep.verdict = rep.extras.count("variance_overflow") ? Verdict::Inconclusive : classify_trace(rep.refinement_trace, noise);
  rep.extras["m"] = m;
  rep.extras["kernel_terms"] = static_cast<double>(terms);
  rep.extras["quad_err"] = worst_err;
  rep.extras["seed"] = static_cast<double>(cfg.seed);
  return rep;
}

std::pair<CriterionReport, CriterionReport> weighted_carleson_criterion(const Symbol& sym, double p, double a,
                                                                        const CriterionConfig& cfg) {
  check_symbol(sym, "weighted_carleson_criterion");
  if (!(p > 1.0) || !(a > 1.0)) throw PreconditionError("weighted_carleson_criterion: requires p > 1 and a > 1");
  const Driver nec = [p, a](cplx w, double m) {
    const double x = w.real() - 0.5;
    return std::pow(m, p) / (std::pow(x, p + 2.0) * std::pow(1.0 + std::abs(w.imag()), a));
  };
  const Driver suf = [p, a](cplx w, double m) {
    const double x = w.real() - 0.5;
    return std::pow(m, p) * std::pow(1.0 + std::abs(w.imag()), a * (p - 1.0)) / std::pow(x, p + 2.0);
  };
  CriterionReport first = run_ladder("weighted_carleson_necessary", sym, nec, cfg);
  CriterionReport second = run_ladder("weighted_carleson_sufficient", sym, suf, cfg);
  for (CriterionReport* r : {&first, &second}) {
    r->extras["p"] = p;
    r->extras["a"] = a;
  }
  return {first, second};
}

CriterionReport bergman_criterion(const Symbol& sym, double p, double a, const CriterionConfig& cfg) {
  check_symbol(sym, "bergman_criterion");
  if (!(p >= 4.0) || !(a >= 0.0)) throw PreconditionError("bergman_criterion: requires p >= 4 and a >= 0");
  const Driver driver = [p, a](cplx w, double m) {
    const double x = w.real() - 0.5;
    return std::pow(m, 0.5 * p) / std::pow(x, 0.5 * (a + 1.0) * p + 2.0);
  };
  CriterionReport rep = run_ladder("bergman", sym, driver, cfg, a);
  rep.extras["p"] = p;
  rep.extras["a"] = a;
  return rep;
}

CriterionReport carleson_necessity_probe(const Symbol& sym, double p, const CriterionConfig& cfg) {
  check_symbol(sym, "carleson_necessity_probe");
  if (!(p > 1.0)) throw PreconditionError("carleson_necessity_probe: requires p > 1");
  const Driver driver = [p](cplx w, double m) {
    const double x = w.real() - 0.5;
    return std::pow(m, p) * zeta_deriv2(2.0 * w.real()) * std::pow(x, 1.0 - p);
  };
  CriterionReport rep = run_ladder("carleson_necessity_probe", sym, driver, cfg);
  rep.extras["p"] = p;
  return rep;
}

DecayFit sector_decay_fit(const Symbol& sym, const RaySpec& rays) {
  if (!(rays.t_min > 0.0) || !(rays.t_max > rays.t_min) || rays.n_points < 2) {
    throw PreconditionError("sector_decay_fit: invalid ray spec");
  }
  std::vector<double> lx, ly;
  for (double ang : rays.angles) {
    for (int k = 0; k < rays.n_points; ++k) {
      const double t = rays.t_min * std::pow(rays.t_max / rays.t_min, static_cast<double>(k) / (rays.n_points - 1));
      const cplx w = rays.vertex + std::polar(t, ang);
      const double x = w.real() - 0.5;
      if (!(x > 0.0)) continue;
      const double m = counting_value(sym, w);
      if (!(m > 0.0) || !std::isfinite(m)) continue;
      lx.push_back(std::log(x));
      ly.push_back(std::log(m));
    }
  }
  DecayFit fit;
  fit.n_points = static_cast<int>(lx.size());
  if (lx.size() < 2) throw NonConvergence("sector_decay_fit: fewer than two points with M > 0");
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  fit.alpha_hat = sxy / sxx;
  fit.r_squared = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return fit;
}

CriterionReport majorant_scaling_trace(double alpha, double p, const std::vector<double>& cutoffs_in) {
  if (!(alpha > 0.0) || !(p > 0.0)) throw PreconditionError("majorant_scaling_trace: alpha and p must be positive");
  std::vector<double> cutoffs = cutoffs_in;
  if (cutoffs.empty()) {
    for (int k = 1; k <= 4; ++k) cutoffs.push_back(std::ldexp(1.0, -10 * k));
  }
  CriterionReport rep;
  rep.name = "majorant_scaling";
  rep.levels = cutoffs;
  const double k = p * alpha - p - 1.0;  // x^{k-1}
  for (double eps : cutoffs) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw PreconditionError("majorant_scaling_trace: cutoffs must lie in (0, 1)");
    const double L = -std::log(eps);
    rep.refinement_trace.push_back(std::abs(k) < 1e-14 ? L : -std::expm1(-k * L) / k);
  }
  rep.value = rep.refinement_trace.back();
  rep.verdict = classify_trace(rep.refinement_trace);
  rep.extras["alpha"] = alpha;
  rep.extras["p"] = p;
  rep.extras["exponent"] = k - 1.0;
  return rep;
}

EmbeddingCheck embedding_check(const DirichletSeries& f, double T) {
  if (!(T > 0.0)) throw PreconditionError("embedding_check: T must be positive");
  EmbeddingCheck out;
  out.h2_norm_sq = f.l2_norm_sq();

  const int pieces = std::max(1, static_cast<int>(std::ceil(2.0 * T)));
  const double h = 2.0 * T / pieces;
  double acc = 0.0;
  for (int j = 0; j < pieces; ++j) {
    acc += integrate_1d([&f](double t) { return std::norm(evaluate(f, cplx(0.5, t))); }, -T + j * h, -T + (j + 1) * h,
                        1e-10);
  }
  out.local_lhs = acc / (2.0 * T);

  DirichletSeries g = f;
  g[1] = 0.0;
  for (std::size_t n = 2; n <= g.size(); ++n) {
    out.dm2_norm_sq += std::norm(g[n]) / std::pow(std::log(static_cast<double>(n)), 2);
  }
  if (out.dm2_norm_sq > 0.0) {
    double b = 0.0;
    for (int j = 0; j < pieces; ++j) {
      const Rect r{0.5, 30.5, -T + j * h, -T + (j + 1) * h};
      b += integrate_rect([&g](cplx s) { return std::norm(evaluate(g, s)) * (s.real() - 0.5); }, r, 1e-8, 4000).value;
    }
    out.bergman_lhs = b / (2.0 * T);
  }

  const DirichletSeries fp = derivative(f);
  out.ol_lhs = integrate_rect([&fp](cplx s) { return std::norm(evaluate(fp, s)) * std::pow(s.real() - 0.5, 2); },
                              Rect{0.5, 1.0, 0.0, 1.0}, 1e-9, 4000)
                   .value;
  const DirichletSeries d = divisor_alpha(2.0, f.size());
  for (std::size_t n = 1; n <= f.size(); ++n) out.a2_norm_sq += std::norm(f[n]) / d[n].real();
  return out;
}

}  // namespace hardylab
