#include "hardylab/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace hardylab {

int Polynomial::degree() const noexcept {
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] != cplx(0.0, 0.0)) return static_cast<int>(k);
  }
  return -1;
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

cplx Polynomial::deriv(cplx z) const noexcept {
  cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return Polynomial(std::move(d));
}

double Polynomial::lipschitz_unit_disk() const noexcept {
  double acc = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) acc += static_cast<double>(k) * std::abs(c[k]);
  return acc;
}

namespace {

cplx polish(const Polynomial& p, cplx w, cplx z) {
  for (int it = 0; it < 8; ++it) {
    const cplx f = p(z) - w;
    const cplx d = p.deriv(z);
    if (d == cplx(0.0, 0.0)) break;
    const cplx step = f / d;
    z -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<cplx> solve_polynomial(const Polynomial& p, cplx w, double residual_tol) {
  const int deg = p.degree();
  if (deg < 1) throw PreconditionError("solve_polynomial: degree must be >= 1");
  std::vector<cplx> a(p.c.begin(), p.c.begin() + deg + 1);
  a[0] -= w;

  std::vector<cplx> roots;
  if (deg == 1) {
    roots.push_back(-a[0] / a[1]);
    return roots;
  }
  if (deg == 2) {
    // numerically stable quadratic formula
    const cplx disc = std::sqrt(a[1] * a[1] - 4.0 * a[2] * a[0]);
    const cplx q1 = -0.5 * (a[1] + disc);
    const cplx q2 = -0.5 * (a[1] - disc);
    const cplx q = std::abs(q1) >= std::abs(q2) ? q1 : q2;
    if (q == cplx(0.0, 0.0)) {
      roots = {0.0, 0.0};
    } else {
      roots = {q / a[2], a[0] / q};
    }
    return roots;
  }

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(deg)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NonConvergence("solve_polynomial: eigen solver failed");

  double scale = 0.0;
  for (const cplx& x : a) scale = std::max(scale, std::abs(x));
  Polynomial shifted(a);
  for (int i = 0; i < deg; ++i) {
    cplx z = polish(p, w, solver.eigenvalues()(i));
    const double resid = std::abs(shifted(z));
    const double zs = std::pow(std::max(1.0, std::abs(z)), deg);
    if (resid > residual_tol * scale * zs) {
      // multiple roots limit the attainable residual; accept the eigenvalue if it is no worse
      const cplx z0 = solver.eigenvalues()(i);
      if (std::abs(shifted(z0)) <= resid) z = z0;
      if (std::abs(shifted(z)) > std::sqrt(residual_tol) * scale * zs) {
        throw NonConvergence("solve_polynomial: root residual too large");
      }
    }
    roots.push_back(z);
  }
  return roots;
}

}  // namespace hardylab
