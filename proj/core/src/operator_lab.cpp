#include "hardylab/operator_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "hardylab/counting.hpp"
#include "hardylab/jacobi.hpp"
#include "hardylab/special_functions.hpp"

namespace hardylab {

namespace {

std::size_t checked_power(std::size_t base, int exp, std::size_t limit) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

double disk_column_norm_sq(const Symbol& sym, std::size_t m) {
  const int n = 2048;
  const double lm = std::log(static_cast<double>(m));
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / n);
    acc += std::exp(-2.0 * lm * sym.disk_map(z).real());
  }
  return acc / n;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

}  // namespace

DirichletSeries composition_column(const Symbol& sym, std::size_t m, std::size_t n_trunc, double* dropped) {
  if (m == 0 || n_trunc == 0) throw PreconditionError("composition_column: m and n_trunc must be >= 1");
  DirichletSeries out(n_trunc);
  const std::size_t shift = checked_power(m, sym.c0(), n_trunc);
  if (shift > n_trunc) {
    if (dropped) *dropped = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const std::size_t inner = n_trunc / shift;
  const double lm = std::log(static_cast<double>(m));
  DirichletSeries g = sym.phi_series(inner);
  const cplx a1 = g[1];
  g[1] = 0.0;
  g *= -lm;
  DirichletSeries e = exp_series(g);
  e *= std::exp(-lm * a1);
  for (std::size_t n = 1; n <= inner; ++n) out[n * shift] = e[n];

  if (dropped) {
    if (sym.c0() == 0 && sym.is_disk_type()) {
      *dropped = std::max(0.0, disk_column_norm_sq(sym, m) - out.l2_norm_sq());
    } else {
      double upper = 0.0;
      for (std::size_t n = n_trunc / 2 + 1; n <= n_trunc; ++n) upper += std::norm(out[n]);
      *dropped = upper;
    }
  }
  return out;
}

DirichletSeries apply_composition(const Symbol& sym, const DirichletSeries& f, std::size_t n_trunc) {
  DirichletSeries out(n_trunc);
  for (std::size_t m = 1; m <= f.size(); ++m) {
    if (f[m] == cplx(0.0, 0.0)) continue;
    DirichletSeries col = composition_column(sym, m, n_trunc);
    col *= f[m];
    out += col;
  }
  return out;
}

OperatorMatrix build_matrix(const Symbol& sym, std::size_t n_basis, std::size_t n_trunc) {
  if (!sym.validated()) throw PreconditionError("build_matrix: symbol is not validated");
  if (n_basis == 0 || n_trunc < n_basis) throw PreconditionError("build_matrix: requires 1 <= N_basis <= N_trunc");
  std::vector<DirichletSeries> cols;
  cols.reserve(n_basis);
  std::set<std::size_t> rows;
  OperatorMatrix out;
  out.n_basis = n_basis;
  out.n_trunc = n_trunc;
  for (std::size_t m = 1; m <= n_basis; ++m) {
    double dropped = 0.0;
    cols.push_back(composition_column(sym, m, n_trunc, &dropped));
    if (std::isfinite(dropped)) out.tail_hint += dropped;
    for (std::size_t n = 1; n <= n_trunc; ++n) {
      if (cols.back()[n] != cplx(0.0, 0.0)) rows.insert(n);
    }
  }
  out.row_index.assign(rows.begin(), rows.end());
  out.entries = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(out.row_index.size()), static_cast<Eigen::Index>(n_basis));
  for (std::size_t i = 0; i < out.row_index.size(); ++i) {
    for (std::size_t j = 0; j < n_basis; ++j) {
      out.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cols[j][out.row_index[i]];
    }
  }
  return out;
}

SchattenReport schatten_from_svals(std::vector<double> svals, const std::vector<double>& ps) {
  SchattenReport rep;
  std::sort(svals.begin(), svals.end(), std::greater<>());
  rep.svals = std::move(svals);
  for (double p : ps) {
    if (!(p > 0.0)) throw PreconditionError("schatten: p must be positive");
    double acc = 0.0;
    for (double s : rep.svals) acc += std::pow(s, p);
    rep.p_norms[p] = std::pow(acc, 1.0 / p);
  }
  return rep;
}

SchattenReport singular_values(const OperatorMatrix& m, const std::vector<double>& ps) {
  const Eigen::MatrixXcd& a = m.entries;
  // drop identically zero rows and columns
  std::vector<Eigen::Index> rows, cols;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a.row(i).squaredNorm() > 0.0) rows.push_back(i);
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (a.col(j).squaredNorm() > 0.0) cols.push_back(j);
  }
  Eigen::MatrixXcd b(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
    }
  }
  std::vector<double> svals;
  if (b.size() > 0) {
    const Eigen::MatrixXcd gram = b.rows() >= b.cols() ? Eigen::MatrixXcd(b.adjoint() * b)
                                                       : Eigen::MatrixXcd(b * b.adjoint());
    for (double l : hermitian_eigenvalues(gram).eigenvalues) svals.push_back(std::sqrt(std::max(0.0, l)));
  }
  const std::size_t width = static_cast<std::size_t>(a.cols());
  svals.resize(std::max(svals.size(), width), 0.0);
  svals.resize(width);
  SchattenReport rep = schatten_from_svals(std::move(svals), ps);
  rep.n_basis = m.n_basis;
  rep.n_trunc = m.n_trunc;
  rep.tail_hint = m.tail_hint;
  return rep;
}

double hilbert_schmidt_norm_sq(const Symbol& sym, std::size_t n_basis, std::size_t n_trunc) {
  double acc = 0.0;
  for (std::size_t m = 1; m <= n_basis; ++m) acc += composition_column(sym, m, n_trunc).l2_norm_sq();
  return acc;
}

IdentityCheck stanton_check(const Symbol& sym, const DirichletSeries& f, const CubatureConfig& cfg,
                            std::size_t n_trunc) {
  if (sym.c0() != 0) throw PreconditionError("stanton_check: requires c0 = 0");
  IdentityCheck out;
  out.lhs = apply_composition(sym, f, n_trunc).l2_norm_sq();
  const DirichletSeries fp = derivative(f);
  const Driver driver = [&fp](cplx w, double m) { return std::norm(evaluate(fp, w)) * m; };
  const MeasureRule rule = build_measure_rule(sym, driver, cfg);
  out.integral = rule.driver_value;
  out.quad_err = rule.err_est;
  out.quad_converged = rule.converged;
  out.rhs = std::norm(evaluate(f, sym.phi_at_infinity())) + 2.0 / std::numbers::pi * out.integral;
  out.gap = std::abs(out.lhs - out.rhs) / std::abs(out.lhs);
  return out;
}

PolarizationCheck polarization_check(const Symbol& sym, const DirichletSeries& f, const DirichletSeries& g,
                                     const CubatureConfig& cfg, std::size_t n_trunc) {
  if (sym.c0() != 0) throw PreconditionError("polarization_check: requires c0 = 0");
  PolarizationCheck out;
  const DirichletSeries cf = apply_composition(sym, f, n_trunc);
  const DirichletSeries cg = apply_composition(sym, g, n_trunc);
  for (std::size_t n = 1; n <= n_trunc; ++n) out.lhs += cf[n] * std::conj(cg[n]);
  const DirichletSeries fp = derivative(f);
  const DirichletSeries gp = derivative(g);
  const Driver driver = [&](cplx w, double m) {
    return (std::norm(evaluate(fp, w)) + std::norm(evaluate(gp, w))) * m;
  };
  const MeasureRule rule = build_measure_rule(sym, driver, cfg);
  double re = 0.0, im = 0.0;
  for (const QuadNode& n : rule.nodes) {
    const cplx v = evaluate(fp, n.w) * std::conj(evaluate(gp, n.w)) * (n.dA * n.m);
    re += v.real();
    im += v.imag();
  }
  const cplx a = sym.phi_at_infinity();
  out.rhs = evaluate(f, a) * std::conj(evaluate(g, a)) + 2.0 / std::numbers::pi * cplx(re, im);
  out.quad_err = rule.err_est;
  out.gap = std::abs(out.lhs - out.rhs) / std::max(std::abs(out.lhs), 1e-300);
  return out;
}

IdentityCheck hs_identity_check(const Symbol& sym, std::size_t n_basis, const CubatureConfig& cfg,
                                std::size_t n_trunc) {
  if (sym.c0() != 0) throw PreconditionError("hs_identity_check: requires c0 = 0");
  IdentityCheck out;
  out.lhs = hilbert_schmidt_norm_sq(sym, n_basis, n_trunc);
  const Driver driver = [n_basis](cplx w, double m) { return zeta_deriv2_partial(2.0 * w.real(), n_basis) * m; };
  const MeasureRule rule = build_measure_rule(sym, driver, cfg);
  out.integral = rule.driver_value;
  out.quad_err = rule.err_est;
  out.quad_converged = rule.converged;
  out.rhs = zeta_partial(2.0 * sym.phi_at_infinity().real(), n_basis) + 2.0 / std::numbers::pi * out.integral;
  out.gap = std::abs(out.lhs - out.rhs) / std::abs(out.lhs);
  return out;
}

OperatorMatrix toeplitz_matrix(const MeasureRule& rule, std::size_t n_basis) {
  if (n_basis < 2) throw PreconditionError("toeplitz_matrix: N_basis must be >= 2");
  const auto dim = static_cast<Eigen::Index>(n_basis - 1);
  OperatorMatrix out;
  out.space = BasisSpace::Dm2;
  out.n_basis = n_basis;
  out.n_trunc = n_basis;
  out.tail_hint = rule.err_est;
  for (std::size_t n = 2; n <= n_basis; ++n) out.row_index.push_back(n);
  out.entries = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<double> logs(n_basis + 1, 0.0);
  for (std::size_t n = 2; n <= n_basis; ++n) logs[n] = std::log(static_cast<double>(n));
  const std::size_t block = 2048;
  Eigen::MatrixXcd f(static_cast<Eigen::Index>(block), dim);
  for (std::size_t start = 0; start < rule.nodes.size(); start += block) {
    const std::size_t len = std::min(block, rule.nodes.size() - start);
    f.setZero();
    for (std::size_t i = 0; i < len; ++i) {
      const QuadNode& q = rule.nodes[start + i];
      const double scale = std::sqrt(q.dA * q.m);
      for (std::size_t n = 2; n <= n_basis; ++n) {
        f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 2)) = scale * logs[n] * std::exp(-q.w * logs[n]);
      }
    }
    out.entries.noalias() += f.adjoint() * f;
  }
  return out;
}

OperatorMatrix toeplitz_matrix(const Symbol& sym, std::size_t n_basis, const CubatureConfig& cfg) {
  if (sym.c0() != 0) throw PreconditionError("toeplitz_matrix: requires c0 = 0");
  const Driver driver = [n_basis](cplx w, double m) { return zeta_deriv2_partial(2.0 * w.real(), n_basis) * m; };
  return toeplitz_matrix(build_measure_rule(sym, driver, cfg), n_basis);
}

std::vector<double> hermitian_spectrum(const OperatorMatrix& m) {
  return hermitian_eigenvalues(m.entries).eigenvalues;
}

CompactnessReport compactness_indicator(const Symbol& sym, const std::vector<double>& deltas_in, int n_re,
                                        int n_im) {
  if (sym.c0() != 0) throw PreconditionError("compactness_indicator: requires c0 = 0");
  if (n_re < 1 || n_im < 1) throw PreconditionError("compactness_indicator: grid sizes must be positive");
  std::vector<double> deltas = deltas_in;
  if (deltas.empty()) {
    for (int k = 1; k <= 8; ++k) deltas.push_back(std::ldexp(1.0, -k));
  }
  CompactnessReport rep;
  rep.deltas = deltas;
  const auto box = sym.range_box();
  for (double delta : deltas) {
    if (!(delta > 0.0)) throw PreconditionError("compactness_indicator: deltas must be positive");
    double im_lo = box ? box->im_min : -1.0;
    double im_hi = box ? box->im_max : 1.0;
    if (box && box->sector_angle > 0.0) {
      const double half = delta * std::tan(box->sector_angle);
      im_lo = std::max(im_lo, -half);
      im_hi = std::min(im_hi, half);
    }
    std::vector<double> ims;
    for (int j = 0; j < n_im; ++j) ims.push_back(n_im == 1 ? 0.5 * (im_lo + im_hi) : im_lo + (im_hi - im_lo) * j / (n_im - 1));
    ims.push_back(0.0);
    ims.push_back(sym.phi_at_infinity().imag());
    double sup = 0.0;
    for (int i = 1; i <= n_re; ++i) {
      const double x = delta * i / n_re;
      for (double im : ims) {
        const cplx w(0.5 + x, im);
        if (w == sym.phi_at_infinity()) continue;
        sup = std::max(sup, counting_value(sym, w) / x);
      }
    }
    rep.ratios.push_back(sup);
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (rep.ratios[i] > 0.0) {
      lx.push_back(std::log(deltas[i]));
      ly.push_back(std::log(rep.ratios[i]));
    }
  }
  rep.slope = least_squares_slope(lx, ly);
  const double last = rep.ratios.back();
  const double prev = rep.ratios.size() >= 2 ? rep.ratios[rep.ratios.size() - 2] : last;
  if (last < 0.05 && last <= rep.ratios.front()) {
    rep.verdict = "compact-consistent";
  } else if (last > 0.2 && std::abs(last - prev) <= 0.2 * last) {
    rep.verdict = "non-compact-consistent";
  } else {
    rep.verdict = "inconclusive";
  }
  return rep;
}

}  // namespace hardylab
