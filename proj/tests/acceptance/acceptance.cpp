#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hardylab/carleson.hpp"
#include "hardylab/counting.hpp"
#include "hardylab/criteria.hpp"
#include "hardylab/dirichlet_series.hpp"
#include "hardylab/operator_lab.hpp"
#include "hardylab/polytorus.hpp"
#include "hardylab/special_functions.hpp"
#include "oracles.hpp"

using namespace hardylab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

DirichletSeries monomials(std::initializer_list<std::size_t> idx) {
  std::size_t top = 1;
  for (std::size_t n : idx) top = std::max(top, n);
  DirichletSeries f(top);
  for (std::size_t n : idx) f[n] += 1.0;
  return f;
}

Outcome c1_stanton() {
  const Symbol s = make_affine(1.0, 0.25);
  double worst = 0.0;
  for (const DirichletSeries& f : {monomials({2}), monomials({3}), monomials({2, 3})}) {
    worst = std::max(worst, stanton_check(s, f).gap);
  }
  std::ostringstream d;
  d << "max gap " << worst;
  return {worst <= 1e-3, d.str()};
}

Outcome c2_counting_cross() {
  const Symbol s = make_disk_lift(Polynomial({1.0, 0.25, 0.125}));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> rad(0.0, 0.4), ang(-std::numbers::pi, std::numbers::pi);
  int bad = 0;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const cplx w = 1.0 + std::polar(rad(rng), ang(rng));
    const CountingSample strip = mean_counting(s, w);
    const CountingSample exact = mean_counting_exact_disk(s, w);
    const double diff = std::abs(strip.value - exact.value);
    const double tol = std::max({strip.err_est, 0.02 * exact.value, 1e-12});
    worst = std::max(worst, exact.value > 0.0 ? diff / exact.value : diff);
    if (diff > tol) ++bad;
  }
  std::ostringstream d;
  d << bad << "/20 outside tolerance, max rel diff " << worst;
  return {bad == 0, d.str()};
}

Outcome c3_affine_oracle() {
  const cplx c(1.0, 0.2);
  const double r = 0.3;
  const Symbol aff = make_affine(c, r);
  const Symbol quad = make_disk_lift(Polynomial({c, 0.0, r}));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rad(1e-3, r), ang(-std::numbers::pi, std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const cplx w = c + std::polar(rad(rng), ang(rng));
    const double ref = oracle::affine_counting(c, r, w);
    worst = std::max(worst, std::abs(mean_counting_exact_disk(aff, w).value - ref));
    worst = std::max(worst, std::abs(mean_counting_exact_disk(quad, w).value - ref));
  }
  worst = std::max(worst, std::abs(mean_counting_exact_disk(aff, c + 0.31).value));
  std::ostringstream d;
  d << "max abs error " << worst;
  return {worst <= 1e-6, d.str()};
}

Outcome c4_rank_one() {
  const std::size_t N = 4096;
  const SchattenReport r = singular_values(build_matrix(make_constant(1.0), N, N));
  int above = 0;
  for (double s : r.svals) above += s > 1e-10;
  const double ref = std::sqrt(oracle::inverse_square_sum(N));
  const double err = std::abs(r.svals[0] - ref);
  const double deficit = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0) - r.svals[0];
  std::ostringstream d;
  d << above << " singular value(s) above 1e-10, s1 = " << r.svals[0] << ", error " << err << ", deficit " << deficit;
  return {above == 1 && err <= 1e-10 && deficit > 0.0 && deficit <= 1.0 / N, d.str()};
}

Outcome c5_hs_identity() {
  const Symbol s = make_affine(1.0, 0.25);
  const IdentityCheck hs = hs_identity_check(s, 64);
  S2mConfig cfg;
  cfg.kernel_terms = 64;
  const CriterionReport m1 = multi_integral_s2m(s, 1, cfg);
  const double diff = std::abs(m1.value - hs.integral);
  const double tol = m1.extras.at("quad_err") + hs.quad_err + 1e-9 * hs.integral;
  std::ostringstream d;
  d << "identity gap " << hs.gap << ", m=1 integral " << m1.value << " vs " << hs.integral << " (diff " << diff
    << ", tol " << tol << ")";
  return {hs.gap <= 1e-3 && diff <= tol, d.str()};
}

Outcome c6_s4_trace() {
  const Symbol s = make_affine(1.0, 0.25);
  const std::size_t N = 48;
  double trace = 0.0;
  for (double l : hermitian_spectrum(toeplitz_matrix(s, N))) trace += l * l;
  S2mConfig cfg;
  cfg.kernel_terms = N;
  const CriterionReport mc = multi_integral_s2m(s, 2, cfg);
  const double rel = std::abs(mc.value - trace) / trace;
  std::ostringstream d;
  d << "sum lambda^2 = " << trace << ", Monte Carlo " << mc.value << " +- " << mc.std_error << ", rel diff " << rel;
  return {rel <= 0.1, d.str()};
}

Outcome c7_inequalities() {
  const Symbol syms[] = {make_affine(1.0, 0.25), make_affine(cplx(0.9, 0.3), 0.35),
                         make_disk_lift(Polynomial({1.0, 0.25, 0.125})),
                         make_disk_lift(Polynomial({cplx(1.2, -0.1), 0.3, cplx(0.0, 0.1), 0.05}))};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rad(0.0, 0.6), ang(-std::numbers::pi, std::numbers::pi), z0re(0.2, 3.0),
      z0im(-2.0, 2.0);
  int lw_bad = 0, ld_bad = 0, pairs = 0;
  for (int k = 0; k < 200; ++k) {
    const Symbol& s = syms[k % 4];
    cplx w = s.phi_at_infinity() + std::polar(rad(rng), ang(rng));
    if (w.real() <= 0.5) w = cplx(1.0 - w.real(), w.imag());
    if (std::abs(w - s.phi_at_infinity()) < 1e-6) continue;
    ++pairs;
    const CountingSample m = mean_counting(s, w);
    if (m.value > littlewood_bound(s, w) + std::max(m.err_est, 1e-9)) ++lw_bad;
    const LindelofResult l = lindelof_check(s, w, cplx(z0re(rng), z0im(rng)));
    if (!l.holds(std::max(m.err_est, 1e-9) * std::max(1.0, l.rhs))) ++ld_bad;
  }
  std::ostringstream d;
  d << pairs << " pairs, Littlewood violations " << lw_bad << ", Lindelof violations " << ld_bad;
  return {pairs >= 195 && lw_bad == 0 && ld_bad == 0, d.str()};
}

Outcome c8_sector_decay() {
  const Symbol s = make_sector_lift(2.0);
  const DecayFit fit = sector_decay_fit(s);
  const CriterionReport lz = luecking_zhu(s, 1.5);
  const CriterionReport maj = majorant_scaling_trace(fit.alpha_hat, 0.9);
  double min_growth = INFINITY;
  for (std::size_t i = 0; i + 1 < maj.refinement_trace.size(); ++i)
    min_growth = std::min(min_growth, maj.refinement_trace[i + 1] / maj.refinement_trace[i]);
  std::ostringstream d;
  d << "alpha_hat " << fit.alpha_hat << " (R^2 " << fit.r_squared << "), LZ(1.5) " << lz.value << " "
    << to_string(lz.verdict) << ", p=0.9 trace growth >= " << min_growth << " " << to_string(maj.verdict);
  return {fit.alpha_hat >= 1.9 && fit.alpha_hat <= 2.1 && lz.verdict == Verdict::FiniteConsistent &&
              maj.verdict == Verdict::DivergentConsistent && min_growth >= 2.0,
          d.str()};
}

Outcome c9_compactness() {
  const CompactnessReport sec = compactness_indicator(make_sector_lift(2.0));
  const CompactnessReport touch = compactness_indicator(make_affine(0.75, 0.25));
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < sec.ratios.size(); ++i) decreasing = decreasing && sec.ratios[i + 1] <= sec.ratios[i];
  const double last = touch.ratios.back(), prev = touch.ratios[touch.ratios.size() - 2];
  const bool stable = last > 0.2 && std::abs(last - prev) <= 0.2 * prev;
  std::ostringstream d;
  d << "sector last ratio " << sec.ratios.back() << " (" << sec.verdict << "), touching last ratios " << prev << ", "
    << last << " (" << touch.verdict << ")";
  return {decreasing && sec.ratios.back() < 0.05 && stable, d.str()};
}

Outcome c10_carleson() {
  const SchurDemo d30 = carleson_schur_demo(30);
  const SchurDemo d40 = carleson_schur_demo(40);
  bool diag = true;
  for (int i = 0; i < 40; ++i) diag = diag && d40.matrix(i, i) == cplx(1.0, 0.0);
  const double drift = std::abs(d40.sup - d30.sup) / d30.sup;
  std::vector<WeightedPoint> mu;
  for (int n = 1; n <= 40; ++n) {
    const cplx w = carleson_point(n);
    mu.push_back({w, w.real() - 0.5});
  }
  const BoxConstant box = carleson_box_constant(mu);
  bool half = true;
  for (double r : box.aligned) half = half && r == 0.5;
  std::ostringstream d;
  d << "diagonal exact " << (diag ? "yes" : "no") << ", sup(30) " << d30.sup << ", sup(40) " << d40.sup << ", drift "
    << drift << ", aligned boxes all 1/2 " << (half ? "yes" : "no");
  return {diag && drift <= 0.01 && half, d.str()};
}

Outcome c11_polytorus() {
  DirichletSeries p(2);
  p[1] = 1.0;
  p[2] = 1.0;
  McConfig hp;
  hp.n_samples = 100000;
  const McEstimate h = hp_norm_mc(p, 2.0, hp);
  const bool hp_ok = std::abs(h.estimate - std::sqrt(2.0)) <= 3.0 * h.std_error;

  const Symbol s = make_affine(1.0, 0.25);
  const std::size_t N = 256;
  McConfig mc;
  mc.n_samples = 100000;
  mc.kernel_terms = N;
  const McEstimate e = mc_schatten_boundary(s, 1, mc);
  const double hs = hilbert_schmidt_norm_sq(s, N, 4096);
  const bool hs_ok = std::abs(e.estimate - hs) <= 3.0 * e.std_error;

  McConfig bv;
  bv.n_samples = 10000;
  bv.seed = 13;
  double min_re = INFINITY;
  for (const Symbol& t : {s, make_disk_lift(Polynomial({1.0, 0.25, 0.125})), make_sector_lift(2.0)}) {
    for (cplx v : sample_boundary_values(t, bv)) min_re = std::min(min_re, v.real());
  }
  std::ostringstream d;
  d << "H2 norm " << h.estimate << " +- " << h.std_error << ", MC HS " << e.estimate << " +- " << e.std_error
    << " vs " << hs << ", min Re phi(chi) " << min_re;
  return {hp_ok && hs_ok && min_re > 0.5, d.str()};
}

Outcome c12_algebra() {
  const std::size_t N = 256;
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  DirichletSeries f(N);
  f[1] = 1.0;
  for (std::size_t n = 2; n <= N; ++n) f[n] = cplx(g(rng), g(rng)) / double(n);
  const double roundtrip = (exp_series(log_series(f)) - f).max_abs();

  DirichletSeries one(N);
  for (std::size_t n = 1; n <= N; ++n) one[n] = 1.0;
  const DirichletSeries delta = convolve(DirichletSeries::mobius(N), one);
  bool mobius_ok = delta[1] == cplx(1.0, 0.0);
  for (std::size_t n = 2; n <= N; ++n) mobius_ok = mobius_ok && delta[n] == cplx(0.0, 0.0);
  const auto mu = oracle::mobius_trial(N);
  const DirichletSeries mob = DirichletSeries::mobius(N);
  for (std::size_t n = 1; n <= N; ++n) mobius_ok = mobius_ok && mob[n] == cplx(mu[n], 0.0);

  const auto d_ref = oracle::divisor_count(N);
  const DirichletSeries d2 = divisor_alpha(2.0, N);
  bool div_ok = true;
  for (std::size_t n = 1; n <= N; ++n) div_ok = div_ok && d2[n] == cplx(d_ref[n], 0.0);
  std::ostringstream d;
  d << "exp/log roundtrip " << roundtrip << ", Moebius exact " << (mobius_ok ? "yes" : "no") << ", divisor_alpha(2) "
    << (div_ok ? "matches" : "differs");
  return {roundtrip <= 1e-10 && mobius_ok && div_ok, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"stanton identity", c1_stanton},
      {"counting cross-validation", c2_counting_cross},
      {"closed-form counting oracle", c3_affine_oracle},
      {"rank-one spectrum", c4_rank_one},
      {"Hilbert-Schmidt identity", c5_hs_identity},
      {"S4 trace consistency", c6_s4_trace},
      {"Littlewood and Lindelof inequalities", c7_inequalities},
      {"sector decay", c8_sector_decay},
      {"compactness dichotomy", c9_compactness},
      {"Carleson sequence", c10_carleson},
      {"polytorus Monte Carlo", c11_polytorus},
      {"algebra kernel", c12_algebra},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
