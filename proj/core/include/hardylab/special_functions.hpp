#pragma once

#include <cstddef>

#include "hardylab/errors.hpp"

namespace hardylab {

/// Parameters for Euler-Maclaurin summation of Dirichlet-type series.
///
/// `terms` is the direct-summation cutoff; the cutoff actually used is
/// max(terms, 2|s|) so that the remainder stays below 1e-10 for |Im s| up to
/// a few hundred. `em_order` is the number of Bernoulli correction terms.
struct ZetaEvalConfig {
  int terms = 64;
  int em_order = 4;

  void check() const;
};

/// Riemann zeta for Re s > 1.
cplx zeta(cplx s, const ZetaEvalConfig& cfg = {});
double zeta(double sigma, const ZetaEvalConfig& cfg = {});

/// Sum over n >= 1 of (log n)^k n^{-s}, Re s > 1. k = 0 is zeta, k = 2 is zeta''.
///
/// Evaluated by Euler-Maclaurin applied to the differentiated summand
/// (log x)^k x^{-s}, so the pole of order k+1 at s = 1 is carried exactly by
/// the tail integral instead of being differenced numerically.
cplx log_moment_sum(cplx s, int k, const ZetaEvalConfig& cfg = {});

/// zeta''(s) = sum_{n>=2} (log n)^2 n^{-s}.
double zeta_deriv2(double sigma, const ZetaEvalConfig& cfg = {});
cplx zeta_deriv2(cplx s, const ZetaEvalConfig& cfg = {});

/// Partial sums matched to a basis cutoff: sum_{n<=N} n^{-s} and
/// sum_{2<=n<=N} (log n)^2 n^{-s}. Valid for any real/complex s.
double zeta_partial(double sigma, std::size_t n_max);
double zeta_deriv2_partial(double sigma, std::size_t n_max);
cplx zeta_deriv2_partial(cplx s, std::size_t n_max);

/// Gamma function for x > 0.
double gamma_real(double x);

}  // namespace hardylab
