#include "hardylab/polytorus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hardylab/arithmetic.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/special_functions.hpp"

namespace hardylab {

namespace {

std::size_t primes_for_symbol(const Symbol& sym, std::size_t requested) {
  const std::size_t need = sym.is_disk_type() ? 1 : std::max<std::size_t>(1, primes_needed(sym.stored_series().support_max()));
  if (requested == 0) return need;
  if (requested < need) throw PreconditionError("polytorus: n_primes too small for the symbol's coefficients");
  return requested;
}

cplx kernel(cplx s, std::size_t terms) {
  if (terms == 0) return zeta(s);
  cplx acc = 0.0;
  for (std::size_t n = 1; n <= terms; ++n) acc += std::exp(-s * std::log(static_cast<double>(n)));
  return acc;
}

double sample_variance(const std::vector<double>& v, std::size_t count) {
  if (count < 2) return 0.0;
  const double mean = std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count), 0.0) / count;
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += (v[i] - mean) * (v[i] - mean);
  return acc / static_cast<double>(count - 1);
}

template <class Draw>
McEstimate run_batches(const McConfig& cfg, Draw&& draw) {
  McEstimate out;
  out.seed = cfg.seed;
  const std::size_t per_batch = cfg.n_samples / static_cast<std::size_t>(cfg.n_batches);
  std::vector<double> means;
  std::vector<double> all;
  all.reserve(per_batch * static_cast<std::size_t>(cfg.n_batches));
  for (int b = 0; b < cfg.n_batches; ++b) {
    std::mt19937_64 rng = batch_rng(cfg.seed, static_cast<std::uint64_t>(b));
    double acc = 0.0;
    for (std::size_t k = 0; k < per_batch; ++k) {
      const double y = draw(rng, out);
      acc += y;
      all.push_back(y);
    }
    means.push_back(acc / static_cast<double>(per_batch));
  }
  out.n_samples = all.size();
  out.estimate = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(means.size());
  out.std_error = std::sqrt(sample_variance(means, means.size()) / static_cast<double>(means.size()));
  const double v_half = sample_variance(all, all.size() / 2);
  const double v_full = sample_variance(all, all.size());
  out.heavy_tail_warning = !std::isfinite(v_full) || v_full > 1.5 * v_half;
  return out;
}

}  // namespace

void McConfig::check() const {
  if (!(sigma_bv > 0.0) || sigma_bv > 0.1) throw PreconditionError("McConfig: sigma_bv must lie in (0, 0.1]");
  if (n_batches < 2) throw PreconditionError("McConfig: need at least 2 batches");
  if (n_samples < static_cast<std::size_t>(n_batches)) throw PreconditionError("McConfig: fewer samples than batches");
}

Character sample_character(std::size_t n_primes, std::mt19937_64& rng) {
  if (n_primes == 0) throw PreconditionError("sample_character: need at least one prime");
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> a(n_primes);
  for (double& x : a) x = angle(rng);
  return Character::from_angles(a);
}

BoundaryValue boundary_value(const Symbol& sym, const Character& chi, double sigma_bv) {
  if (!(sigma_bv > 0.0) || sigma_bv > 0.1) throw PreconditionError("boundary_value: sigma_bv must lie in (0, 0.1]");
  BoundaryValue out;
  if (sym.is_disk_type()) {
    out.at_sigma = sym.phi_twisted(chi, sigma_bv);
    out.at_two_sigma = sym.phi_twisted(chi, 2.0 * sigma_bv);
  } else {
    const DirichletSeries t = twist(sym.stored_series(), chi);
    out.at_sigma = evaluate(t, sigma_bv);
    out.at_two_sigma = evaluate(t, 2.0 * sigma_bv);
  }
  out.value = 2.0 * out.at_sigma - out.at_two_sigma;
  out.truncation_warning = std::abs(out.at_sigma - out.at_two_sigma) > 1e-2;
  return out;
}

McEstimate mc_schatten_boundary(const Symbol& sym, int m, const McConfig& cfg) {
  cfg.check();
  if (m != 1 && m != 2) throw PreconditionError("mc_schatten_boundary: m must be 1 or 2");
  if (sym.c0() != 0) throw PreconditionError("mc_schatten_boundary: requires c0 = 0");
  const std::size_t J = primes_for_symbol(sym, cfg.n_primes);
  double min_re = std::numeric_limits<double>::infinity();
  McEstimate out = run_batches(cfg, [&](std::mt19937_64& rng, McEstimate& est) {
    const BoundaryValue v1 = boundary_value(sym, sample_character(J, rng), cfg.sigma_bv);
    est.truncation_warnings += v1.truncation_warning ? 1 : 0;
    min_re = std::min(min_re, v1.value.real());
    if (m == 1) return kernel(2.0 * v1.value.real(), cfg.kernel_terms).real();
    const BoundaryValue v2 = boundary_value(sym, sample_character(J, rng), cfg.sigma_bv);
    est.truncation_warnings += v2.truncation_warning ? 1 : 0;
    min_re = std::min(min_re, v2.value.real());
    return std::norm(kernel(std::conj(v1.value) + v2.value, cfg.kernel_terms));
  });
  out.min_re = min_re;
  return out;
}

McEstimate hp_norm_mc(const DirichletSeries& P, double p, const McConfig& cfg) {
  cfg.check();
  if (!(p > 0.0)) throw PreconditionError("hp_norm_mc: p must be positive");
  const std::size_t top = std::max<std::size_t>(P.support_max(), 1);
  const std::size_t need = std::max<std::size_t>(1, primes_needed(top));
  const std::size_t J = cfg.n_primes == 0 ? need : cfg.n_primes;
  if (J < need) throw PreconditionError("hp_norm_mc: n_primes too small for the polynomial");
  McEstimate raw = run_batches(cfg, [&](std::mt19937_64& rng, McEstimate&) {
    const std::vector<cplx> chi = sample_character(J, rng).table(top);
    cplx acc = 0.0;
    for (std::size_t n = 1; n <= top; ++n) acc += P[n] * chi[n];
    return std::pow(std::abs(acc), p);
  });
  McEstimate out = raw;
  out.estimate = std::pow(raw.estimate, 1.0 / p);
  out.std_error = raw.estimate > 0.0 ? std::pow(raw.estimate, 1.0 / p - 1.0) * raw.std_error / p : 0.0;
  return out;
}

std::vector<cplx> sample_boundary_values(const Symbol& sym, const McConfig& cfg) {
  cfg.check();
  const std::size_t J = primes_for_symbol(sym, cfg.n_primes);
  std::vector<cplx> out;
  const std::size_t per_batch = cfg.n_samples / static_cast<std::size_t>(cfg.n_batches);
  for (int b = 0; b < cfg.n_batches; ++b) {
    std::mt19937_64 rng = batch_rng(cfg.seed, static_cast<std::uint64_t>(b));
    for (std::size_t k = 0; k < per_batch; ++k) out.push_back(boundary_value(sym, sample_character(J, rng), cfg.sigma_bv).value);
  }
  return out;
}

}  // namespace hardylab
