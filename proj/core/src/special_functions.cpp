#include "hardylab/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace hardylab {

namespace {

// B_{2i} / (2i)! for i = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

int effective_cutoff(cplx s, const ZetaEvalConfig& cfg) {
  const double scale = std::ceil(2.0 * std::abs(s));
  return std::max(cfg.terms, static_cast<int>(std::min(scale, 1.0e6)));
}

}  // namespace

void ZetaEvalConfig::check() const {
  if (terms < 2) throw PreconditionError("ZetaEvalConfig: terms must be >= 2");
  if (em_order < 0 || em_order > 8) {
    throw PreconditionError("ZetaEvalConfig: em_order must be in [0, 8]");
  }
}

cplx log_moment_sum(cplx s, int k, const ZetaEvalConfig& cfg) {
  cfg.check();
  if (k < 0) throw PreconditionError("log_moment_sum: k must be non-negative");
  if (!(s.real() > 1.0)) {
    throw DomainError("log_moment_sum: requires Re s > 1, got Re s = " + std::to_string(s.real()));
  }

  const int n_cut = effective_cutoff(s, cfg);
  cplx head = 0.0;
  for (int n = 2; n < n_cut; ++n) {
    const double ln = std::log(static_cast<double>(n));
    head += std::pow(ln, k) * std::exp(-s * ln);
  }
  if (k == 0) head += 1.0;

  const double big_n = static_cast<double>(n_cut);
  const double ln_n = std::log(big_n);
  const cplx n_pow = std::exp(-s * ln_n);  // N^{-s}

  // Tail integral of (log x)^k x^{-s} over [N, inf).
  const cplx u = s - 1.0;
  cplx integral = 0.0;
  double falling = 1.0;  // k!/(k-j)!
  cplx u_pow = u;
  for (int j = 0; j <= k; ++j) {
    integral += falling * std::pow(ln_n, k - j) / u_pow;
    falling *= static_cast<double>(k - j);
    u_pow *= u;
  }
  integral *= n_pow * big_n;

  // Derivatives f^{(j)}(x) = x^{-s-j} P_j(log x) with
  // P_{j+1}(L) = -(s+j) P_j(L) + P_j'(L).
  std::vector<cplx> poly(static_cast<std::size_t>(k) + 1, 0.0);
  poly[static_cast<std::size_t>(k)] = 1.0;
  auto eval_poly = [&](const std::vector<cplx>& p) {
    cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * ln_n + p[i];
    return acc;
  };
  auto step = [&](std::vector<cplx>& p, int j) {
    std::vector<cplx> next(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] = -(s + static_cast<double>(j)) * p[i];
      if (i + 1 < p.size()) next[i] += static_cast<double>(i + 1) * p[i + 1];
    }
    p.swap(next);
  };

  const cplx f_n = n_pow * eval_poly(poly);
  cplx correction = 0.0;
  int order = 0;
  double inv_n_pow = 1.0;  // N^{-j}
  for (int i = 1; i <= cfg.em_order; ++i) {
    // advance to derivative 2i-1
    while (order < 2 * i - 1) {
      step(poly, order);
      ++order;
      inv_n_pow /= big_n;
    }
    correction += kBernoulliOverFactorial[static_cast<std::size_t>(i - 1)] * n_pow * inv_n_pow *
                  eval_poly(poly);
  }

  return head + integral + 0.5 * f_n - correction;
}

cplx zeta(cplx s, const ZetaEvalConfig& cfg) {
  if (!(s.real() > 1.0)) {
    throw DomainError("zeta: requires Re s > 1, got Re s = " + std::to_string(s.real()));
  }
  return log_moment_sum(s, 0, cfg);
}

double zeta(double sigma, const ZetaEvalConfig& cfg) { return zeta(cplx(sigma, 0.0), cfg).real(); }

double zeta_deriv2(double sigma, const ZetaEvalConfig& cfg) {
  if (!(sigma > 1.0)) throw DomainError("zeta_deriv2: requires sigma > 1");
  return log_moment_sum(cplx(sigma, 0.0), 2, cfg).real();
}

cplx zeta_deriv2(cplx s, const ZetaEvalConfig& cfg) {
  if (!(s.real() > 1.0)) throw DomainError("zeta_deriv2: requires Re s > 1");
  return log_moment_sum(s, 2, cfg);
}

double zeta_partial(double sigma, std::size_t n_max) {
  double acc = 0.0;
  for (std::size_t n = n_max; n >= 1; --n) acc += std::exp(-sigma * std::log(static_cast<double>(n)));
  return acc;
}

double zeta_deriv2_partial(double sigma, std::size_t n_max) {
  double acc = 0.0;
  for (std::size_t n = n_max; n >= 2; --n) {
    const double ln = std::log(static_cast<double>(n));
    acc += ln * ln * std::exp(-sigma * ln);
  }
  return acc;
}

cplx zeta_deriv2_partial(cplx s, std::size_t n_max) {
  cplx acc = 0.0;
  for (std::size_t n = n_max; n >= 2; --n) {
    const double ln = std::log(static_cast<double>(n));
    acc += ln * ln * std::exp(-s * ln);
  }
  return acc;
}

double gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: requires x > 0");
  return std::tgamma(x);
}

}  // namespace hardylab
