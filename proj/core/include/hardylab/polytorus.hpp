#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hardylab/character.hpp"
#include "hardylab/dirichlet_series.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

struct McConfig {
  std::size_t n_primes = 0;      // 0: the fewest primes covering every index in use
  std::size_t n_samples = 10000;
  double sigma_bv = 1e-3;        // in (0, 0.1]
  std::uint64_t seed = 1;
  int n_batches = 20;
  std::size_t kernel_terms = 0;  // 0: full zeta; otherwise sum over n <= kernel_terms
  void check() const;
};

/// i.i.d. uniform angles for the first n_primes primes.
Character sample_character(std::size_t n_primes, std::mt19937_64& rng);

struct BoundaryValue {
  cplx value{0.0, 0.0};       // Richardson extrapolation 2 phi(sigma) - phi(2 sigma)
  cplx at_sigma{0.0, 0.0};
  cplx at_two_sigma{0.0, 0.0};
  bool truncation_warning = false;  // the two sigma values differ by more than 1e-2
};

/// phi(chi) as the sigma -> 0 limit of phi_chi(sigma).
BoundaryValue boundary_value(const Symbol& sym, const Character& chi, double sigma_bv);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  bool heavy_tail_warning = false;
  int truncation_warnings = 0;
  double min_re = 0.0;   // smallest Re phi(chi) seen
};

/// m = 1: E zeta(2 Re phi(chi)); m = 2: E zeta(conj phi(chi_1) + phi(chi_2)) zeta(conj phi(chi_2) + phi(chi_1)).
McEstimate mc_schatten_boundary(const Symbol& sym, int m, const McConfig& cfg = {});

/// (mean |P_chi(0)|^p)^{1/p} with a delta-method standard error.
McEstimate hp_norm_mc(const DirichletSeries& P, double p, const McConfig& cfg = {});

/// phi(chi) for cfg.n_samples characters (batch streams as in the estimators).
std::vector<cplx> sample_boundary_values(const Symbol& sym, const McConfig& cfg = {});

}  // namespace hardylab
