#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "hardylab/quadrature.hpp"
#include "hardylab/symbol.hpp"

namespace hardylab {

enum class BasisSpace { H2, Dm2 };

/// Truncated operator in the n^{-s} basis. Only rows that can be nonzero are stored:
/// entries(i, j) is the coefficient of row_index[i]^{-s} in the image of basis vector j+1
/// (H2) or j+2 (Dm2, basis f_n = (log n) n^{-s}, n >= 2).
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  std::vector<std::size_t> row_index;
  BasisSpace space = BasisSpace::H2;
  std::size_t n_basis = 0;
  std::size_t n_trunc = 0;
  double tail_hint = 0.0;  // H2: column mass dropped beyond n_trunc; Dm2: quadrature error
};

struct SchattenReport {
  std::vector<double> svals;           // non-increasing, padded to the basis size
  std::map<double, double> p_norms;    // p -> (sum s^p)^{1/p}
  std::size_t n_basis = 0;
  std::size_t n_trunc = 0;
  double tail_hint = 0.0;
};

/// Image of m^{-s}: coefficients of m^{-c0 s} m^{-phi(s)} up to n_trunc.
/// `dropped` (optional) receives the squared H2 mass beyond n_trunc when it is
/// computable (c0 = 0 disk types), else a heuristic from the upper half of the range.
DirichletSeries composition_column(const Symbol& sym, std::size_t m, std::size_t n_trunc, double* dropped = nullptr);

/// C_psi f truncated at n_trunc.
DirichletSeries apply_composition(const Symbol& sym, const DirichletSeries& f, std::size_t n_trunc);

OperatorMatrix build_matrix(const Symbol& sym, std::size_t n_basis, std::size_t n_trunc);

/// Singular values through the Gram matrix on the smaller side and cyclic Jacobi.
SchattenReport singular_values(const OperatorMatrix& m, const std::vector<double>& ps = {1.0, 2.0, 4.0});
SchattenReport schatten_from_svals(std::vector<double> svals, const std::vector<double>& ps);

/// sum_{m <= n_basis} ||C m^{-s}||^2 with columns truncated at n_trunc (no matrix stored).
double hilbert_schmidt_norm_sq(const Symbol& sym, std::size_t n_basis, std::size_t n_trunc);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;        // |lhs - rhs| / |lhs|
  double integral = 0.0;   // area-integral piece (before the 2/pi factor)
  double quad_err = 0.0;
  bool quad_converged = false;
};

struct PolarizationCheck {
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  double gap = 0.0;
  double quad_err = 0.0;
};

/// ||C f||^2 = |f(phi(+inf))|^2 + (2/pi) int |f'|^2 M dA.
IdentityCheck stanton_check(const Symbol& sym, const DirichletSeries& f, const CubatureConfig& cfg = {},
                            std::size_t n_trunc = 4096);

/// <C f, C g> = f(phi(+inf)) conj(g(phi(+inf))) + (2/pi) int f' conj(g') M dA.
PolarizationCheck polarization_check(const Symbol& sym, const DirichletSeries& f, const DirichletSeries& g,
                                     const CubatureConfig& cfg = {}, std::size_t n_trunc = 4096);

/// sum_{m<=N} ||C m^{-s}||^2 = zeta_N(2 Re phi(+inf)) + (2/pi) int zeta''_N(2 Re w) M dA.
IdentityCheck hs_identity_check(const Symbol& sym, std::size_t n_basis = 64, const CubatureConfig& cfg = {},
                                std::size_t n_trunc = 4096);

/// Gram matrix <T f_m, f_n> = int f_m conj(f_n) M dA on f_n = (log n) n^{-s}, 2 <= n <= n_basis.
OperatorMatrix toeplitz_matrix(const Symbol& sym, std::size_t n_basis, const CubatureConfig& cfg = {});
/// Same on a prebuilt measure rule.
OperatorMatrix toeplitz_matrix(const MeasureRule& rule, std::size_t n_basis);

/// Eigenvalues of a Hermitian OperatorMatrix (Toeplitz), non-increasing.
std::vector<double> hermitian_spectrum(const OperatorMatrix& m);

struct CompactnessReport {
  std::vector<double> deltas;
  std::vector<double> ratios;   // sup over 1/2 < Re w < 1/2 + delta of M(w)/(Re w - 1/2)
  double slope = 0.0;           // least-squares slope of log ratio vs log delta
  std::string verdict;          // compact-consistent, non-compact-consistent, inconclusive
};

/// Grid sup of M(w)/(Re w - 1/2) on shrinking strips.
CompactnessReport compactness_indicator(const Symbol& sym, const std::vector<double>& deltas = {},
                                        int n_re = 24, int n_im = 64);

}  // namespace hardylab
