#include "hardylab/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hardylab/errors.hpp"

namespace hardylab {

namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

}  // namespace

JacobiResult hermitian_eigenvalues(const Eigen::MatrixXcd& input, double tol, int max_sweeps) {
  if (input.rows() != input.cols()) throw PreconditionError("hermitian_eigenvalues: matrix must be square");
  const Eigen::Index n = input.rows();
  // symmetrize against rounding in the caller's assembly
  Eigen::MatrixXcd a = 0.5 * (input + input.adjoint());
  const double fro = a.norm();
  JacobiResult out;
  const double target = tol * std::max(fro, 1e-300);

  while ((out.off_norm = off_diagonal_norm(a)) > target) {
    if (out.sweeps >= max_sweeps) throw NonConvergence("hermitian_eigenvalues: too many sweeps");
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // phase: scale column q by e^{-i phi} and row q by e^{i phi} so a_pq becomes |a_pq|
        const std::complex<double> ph = std::conj(apq) / mag;
        a.col(q) *= ph;
        a.row(q) *= std::conj(ph);
        a(q, q) = a(q, q).real();

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const std::complex<double> arp = a(r, p);
          const std::complex<double> arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
          a(p, r) = std::conj(a(r, p));
          a(q, r) = std::conj(a(r, q));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

}  // namespace hardylab
