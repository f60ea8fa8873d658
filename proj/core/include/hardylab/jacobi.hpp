#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hardylab {

struct JacobiResult {
  std::vector<double> eigenvalues;  // non-increasing
  int sweeps = 0;
  double off_norm = 0.0;            // final off-diagonal Frobenius norm
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations (a phase
/// rotation making a_pq real, then a real Givens rotation), iterated until the
/// off-diagonal Frobenius norm is <= tol * ||A||_F. Throws NonConvergence after
/// max_sweeps.
JacobiResult hermitian_eigenvalues(const Eigen::MatrixXcd& a, double tol = 1e-15, int max_sweeps = 100);

}  // namespace hardylab
