#pragma once

#include <cstddef>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

class Character;

/// Truncated Dirichlet series sum_{n<=N} a_n n^{-s}, stored densely with 1-based access.
///
/// Every algebraic operation is exact on the quotient by {n > N}: products and
/// exponentials drop terms beyond N and never alias.
class DirichletSeries {
 public:
  explicit DirichletSeries(std::size_t n_max = 1);
  DirichletSeries(std::size_t n_max, std::vector<cplx> coeffs_one_based_from_1);

  /// e_1 (the constant 1).
  static DirichletSeries one(std::size_t n_max);
  /// The monomial c * n^{-s}.
  static DirichletSeries monomial(std::size_t n_max, std::size_t n, cplx c = 1.0);
  /// sum_{n<=N} n^{-s}.
  static DirichletSeries zeta_partial(std::size_t n_max);
  /// sum_{n<=N} mu(n) n^{-s}.
  static DirichletSeries mobius(std::size_t n_max);

  std::size_t size() const noexcept { return coeffs_.size(); }
  cplx operator[](std::size_t n) const { return coeffs_[n - 1]; }
  cplx& operator[](std::size_t n) { return coeffs_[n - 1]; }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }

  /// Same coefficients, truncated or zero-padded to n_max.
  DirichletSeries resized(std::size_t n_max) const;

  DirichletSeries& operator+=(const DirichletSeries& other);
  DirichletSeries& operator-=(const DirichletSeries& other);
  DirichletSeries& operator*=(cplx scalar);

  /// Largest n with a nonzero coefficient (0 for the zero series).
  std::size_t support_max() const noexcept;
  double l2_norm_sq() const noexcept;
  double max_abs() const noexcept;

 private:
  std::vector<cplx> coeffs_;
};

DirichletSeries operator+(DirichletSeries a, const DirichletSeries& b);
DirichletSeries operator-(DirichletSeries a, const DirichletSeries& b);
DirichletSeries operator*(cplx scalar, DirichletSeries a);

/// Dirichlet convolution (fg)_n = sum_{d|n} f_d g_{n/d}; result has N = max of the two.
DirichletSeries convolve(const DirichletSeries& f, const DirichletSeries& g);

/// exp(f) for f_1 = 0 via g_n log n = sum_{d|n, d>1} f_d log d g_{n/d}.
DirichletSeries exp_series(const DirichletSeries& f);

/// log(f) for f_1 = 1; inverse of exp_series.
DirichletSeries log_series(const DirichletSeries& f);

/// Coefficients of zeta(s)^alpha truncated at N (generalized divisor function d_alpha).
/// Integer alpha with |alpha| <= 8 is computed by exact convolution.
DirichletSeries divisor_alpha(double alpha, std::size_t n_max);

/// sum a_n n^{-s}.
cplx evaluate(const DirichletSeries& f, cplx s);

/// f'(s): coefficients -a_n log n.
DirichletSeries derivative(const DirichletSeries& f);

/// Vertical limit f_chi: coefficients a_n chi(n). Throws PreconditionError if
/// some n with a_n != 0 does not factor over the primes carried by chi.
DirichletSeries twist(const DirichletSeries& f, const Character& chi);

}  // namespace hardylab
