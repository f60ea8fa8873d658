#pragma once

#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

/// Complex polynomial sum_k c_k z^k (c_0 first).
struct Polynomial {
  std::vector<cplx> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}

  /// Degree after dropping trailing exact zeros; -1 for the zero polynomial.
  int degree() const noexcept;
  cplx operator()(cplx z) const noexcept;
  cplx deriv(cplx z) const noexcept;
  Polynomial derivative() const;
  /// sum_k k |c_k|: Lipschitz constant of the polynomial on the closed unit disk.
  double lipschitz_unit_disk() const noexcept;
};

/// All complex roots of p(z) = w with multiplicity (repeated entries).
///
/// Degree 1 and 2 use closed forms; higher degrees use the eigenvalues of the
/// companion matrix followed by a Newton polish. Throws NonConvergence if the
/// polished residual stays above `residual_tol` times the coefficient scale.
std::vector<cplx> solve_polynomial(const Polynomial& p, cplx w, double residual_tol = 1e-10);

}  // namespace hardylab
