#include "hardylab/dirichlet_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardylab/arithmetic.hpp"
#include "hardylab/character.hpp"

namespace hardylab {

DirichletSeries::DirichletSeries(std::size_t n_max) : coeffs_(n_max, cplx(0.0, 0.0)) {
  if (n_max == 0) throw PreconditionError("DirichletSeries: N must be >= 1");
}

DirichletSeries::DirichletSeries(std::size_t n_max, std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (n_max == 0) throw PreconditionError("DirichletSeries: N must be >= 1");
  coeffs_.resize(n_max, cplx(0.0, 0.0));
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw PreconditionError("DirichletSeries: non-finite coefficient");
    }
  }
}

DirichletSeries DirichletSeries::one(std::size_t n_max) { return monomial(n_max, 1, 1.0); }

DirichletSeries DirichletSeries::monomial(std::size_t n_max, std::size_t n, cplx c) {
  DirichletSeries f(n_max);
  if (n == 0) throw PreconditionError("DirichletSeries::monomial: n must be >= 1");
  if (n <= n_max) f[n] = c;
  return f;
}

DirichletSeries DirichletSeries::zeta_partial(std::size_t n_max) {
  return DirichletSeries(n_max, std::vector<cplx>(n_max, cplx(1.0, 0.0)));
}

DirichletSeries DirichletSeries::mobius(std::size_t n_max) {
  DirichletSeries f(n_max);
  const auto spf = smallest_prime_factors(n_max);
  f[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = spf[n];
    const std::size_t m = n / p;
    f[n] = (m % p == 0) ? cplx(0.0) : -f[m];
  }
  return f;
}

DirichletSeries DirichletSeries::resized(std::size_t n_max) const {
  std::vector<cplx> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(n_max, size())));
  return DirichletSeries(n_max, std::move(c));
}

DirichletSeries& DirichletSeries::operator+=(const DirichletSeries& other) {
  if (other.size() > size()) coeffs_.resize(other.size(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < other.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DirichletSeries& DirichletSeries::operator-=(const DirichletSeries& other) {
  if (other.size() > size()) coeffs_.resize(other.size(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < other.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DirichletSeries& DirichletSeries::operator*=(cplx scalar) {
  for (cplx& c : coeffs_) c *= scalar;
  return *this;
}

std::size_t DirichletSeries::support_max() const noexcept {
  for (std::size_t i = size(); i-- > 0;) {
    if (coeffs_[i] != cplx(0.0, 0.0)) return i + 1;
  }
  return 0;
}

double DirichletSeries::l2_norm_sq() const noexcept {
  double acc = 0.0;
  for (const cplx& c : coeffs_) acc += std::norm(c);
  return acc;
}

double DirichletSeries::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

DirichletSeries operator+(DirichletSeries a, const DirichletSeries& b) { return a += b; }
DirichletSeries operator-(DirichletSeries a, const DirichletSeries& b) { return a -= b; }
DirichletSeries operator*(cplx scalar, DirichletSeries a) { return a *= scalar; }

DirichletSeries convolve(const DirichletSeries& f, const DirichletSeries& g) {
  const std::size_t n_max = std::max(f.size(), g.size());
  DirichletSeries out(n_max);
  for (std::size_t d = 1; d <= f.size(); ++d) {
    const cplx fd = f[d];
    if (fd == cplx(0.0, 0.0)) continue;
    for (std::size_t k = 1; k <= g.size() && d * k <= n_max; ++k) out[d * k] += fd * g[k];
  }
  return out;
}

DirichletSeries exp_series(const DirichletSeries& f) {
  if (f[1] != cplx(0.0, 0.0)) {
    throw PreconditionError("exp_series: requires f_1 = 0");
  }
  const std::size_t n_max = f.size();
  // weighted[d] = f_d log d on the support of f
  std::vector<std::pair<std::size_t, cplx>> weighted;
  for (std::size_t d = 2; d <= n_max; ++d) {
    if (f[d] != cplx(0.0, 0.0)) weighted.emplace_back(d, f[d] * std::log(static_cast<double>(d)));
  }
  std::vector<cplx> acc(n_max + 1, cplx(0.0, 0.0));
  DirichletSeries g(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    g[n] = (n == 1) ? cplx(1.0, 0.0) : acc[n] / std::log(static_cast<double>(n));
    if (g[n] == cplx(0.0, 0.0)) continue;
    for (const auto& [d, w] : weighted) {
      if (d * n > n_max) break;
      acc[d * n] += w * g[n];
    }
  }
  return g;
}

DirichletSeries log_series(const DirichletSeries& f) {
  if (std::abs(f[1] - cplx(1.0, 0.0)) > 1e-14) {
    throw PreconditionError("log_series: requires f_1 = 1");
  }
  const std::size_t n_max = f.size();
  std::vector<std::size_t> f_support;
  for (std::size_t k = 2; k <= n_max; ++k) {
    if (f[k] != cplx(0.0, 0.0)) f_support.push_back(k);
  }
  std::vector<cplx> acc(n_max + 1, cplx(0.0, 0.0));
  DirichletSeries g(n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double ln = std::log(static_cast<double>(n));
    g[n] = f[n] - acc[n] / ln;
    if (g[n] == cplx(0.0, 0.0)) continue;
    const cplx w = g[n] * ln;
    for (std::size_t k : f_support) {
      if (k * n > n_max) break;
      acc[k * n] += w * f[k];
    }
  }
  return g;
}

DirichletSeries divisor_alpha(double alpha, std::size_t n_max) {
  if (!std::isfinite(alpha)) throw PreconditionError("divisor_alpha: alpha must be finite");
  if (alpha == std::round(alpha) && std::abs(alpha) <= 8.0) {
    // small integer powers by repeated convolution, exact in integer arithmetic
    const DirichletSeries base = alpha > 0 ? DirichletSeries::zeta_partial(n_max) : DirichletSeries::mobius(n_max);
    DirichletSeries out = DirichletSeries::one(n_max);
    for (int k = 0; k < static_cast<int>(std::abs(alpha)); ++k) out = convolve(out, base);
    return out;
  }
  DirichletSeries l = log_series(DirichletSeries::zeta_partial(n_max));
  l *= alpha;
  return exp_series(l);
}

cplx evaluate(const DirichletSeries& f, cplx s) {
  cplx acc = f[1];
  for (std::size_t n = 2; n <= f.size(); ++n) {
    const cplx c = f[n];
    if (c == cplx(0.0, 0.0)) continue;
    acc += c * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return acc;
}

DirichletSeries derivative(const DirichletSeries& f) {
  DirichletSeries out(f.size());
  for (std::size_t n = 2; n <= f.size(); ++n) out[n] = -f[n] * std::log(static_cast<double>(n));
  return out;
}

DirichletSeries twist(const DirichletSeries& f, const Character& chi) {
  DirichletSeries out(f.size());
  for (std::size_t n = 1; n <= f.size(); ++n) {
    if (f[n] != cplx(0.0, 0.0)) out[n] = f[n] * chi(n);
  }
  return out;
}

}  // namespace hardylab
