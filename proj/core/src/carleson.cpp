#include "hardylab/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardylab/special_functions.hpp"

namespace hardylab {

cplx carleson_point(int n) {
  return {0.5 + std::ldexp(1.0, -n), n + 0.5};
}

SchurDemo carleson_schur_demo(int n_max, double b_target) {
  if (n_max < 2 || n_max > 40) throw PreconditionError("carleson_schur_demo: n_max must be in [2, 40]");
  if (!(b_target > 0.0) || !(b_target < 1.0)) throw PreconditionError("carleson_schur_demo: b must be in (0, 1)");
  SchurDemo out;
  std::vector<cplx> s(static_cast<std::size_t>(n_max));
  std::vector<double> diag(s.size());
  for (int i = 1; i <= n_max; ++i) {
    s[i - 1] = carleson_point(i);
    // same complex path as the numerators so that A_ii divides equal numbers
    diag[i - 1] = zeta(s[i - 1] + std::conj(s[i - 1])).real();
    if (!std::isfinite(diag[i - 1])) throw DomainError("carleson_schur_demo: zeta overflow");
  }
  out.matrix.resize(n_max, n_max);
  for (int i = 0; i < n_max; ++i) {
    for (int j = 0; j < n_max; ++j) {
      const cplx num = zeta(s[i] + std::conj(s[j]));
      out.matrix(i, j) = num / std::sqrt(diag[i] * diag[j]);
    }
  }
  for (int i = 0; i < n_max; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n_max; ++j) acc += std::abs(out.matrix(i, j));
    out.row_sums.push_back(acc);
  }
  out.sup = *std::max_element(out.row_sums.begin(), out.row_sums.end());

  for (int i = 0; i + 1 < n_max; ++i) out.ratios.push_back(diag[i] / diag[i + 1]);
  int i0 = n_max;
  for (int i = static_cast<int>(out.ratios.size()) - 1; i >= 0 && out.ratios[i] <= b_target; --i) i0 = i + 1;
  out.i0 = i0;
  out.b = 0.0;
  for (std::size_t i = static_cast<std::size_t>(i0 - 1); i < out.ratios.size(); ++i) out.b = std::max(out.b, out.ratios[i]);
  if (out.b == 0.0) out.b = b_target;
  for (int i = 0; i < n_max; ++i) {
    for (int j = 0; j < n_max; ++j) {
      if (i == j) continue;
      const double env = std::pow(out.b, 0.5 * std::abs(i - j));
      out.decay_constant = std::max(out.decay_constant, std::abs(out.matrix(i, j)) / env);
    }
  }
  return out;
}

double box_ratio(const std::vector<WeightedPoint>& mu, double y, double h) {
  if (!(h > 0.0)) throw PreconditionError("box_ratio: side must be positive");
  const double lo = y - 0.5 * h;
  const double hi = y + 0.5 * h;
  double mass = 0.0;
  for (const WeightedPoint& p : mu) {
    const double x = p.w.real();
    if (x >= 0.5 && x <= 0.5 + h && p.w.imag() >= lo && p.w.imag() <= hi) mass += p.mass;
  }
  return mass / h;
}

BoxConstant carleson_box_constant(const std::vector<WeightedPoint>& mu, int k_min, int k_max) {
  BoxConstant out;
  auto consider = [&out, &mu](double y, double h) {
    const double r = box_ratio(mu, y, h);
    if (r > out.sup) {
      out.sup = r;
      out.argsup = {0.5 + 0.5 * h, y};
      out.side_at_sup = h;
    }
    return r;
  };
  for (const WeightedPoint& p : mu) {
    if (p.mass < 0.0) throw PreconditionError("carleson_box_constant: negative mass");
    const double h = 2.0 * (p.w.real() - 0.5);
    out.aligned.push_back(h > 0.0 ? consider(p.w.imag(), h) : std::numeric_limits<double>::infinity());
    for (int k = k_min; k <= k_max; ++k) consider(p.w.imag(), std::ldexp(1.0, -k));
  }
  return out;
}

}  // namespace hardylab
