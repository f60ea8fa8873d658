#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

namespace {

// Gauss-Legendre on [0, 1] by Newton iteration on P_n.
void gauss01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = 0.5 * (1.0 - z);
    w[i] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
}

}  // namespace

cplx brute_log_zeta(cplx s, int k, std::size_t N) {
  cplx acc = 0.0;
  for (std::size_t n = N; n >= 1; --n) {
    const double L = std::log(static_cast<double>(n));
    acc += std::pow(L, k) * std::exp(-s * L);
  }
  const double L = std::log(static_cast<double>(N));
  const cplx a = s - 1.0;
  cplx tail = 0.0;
  double fact_ratio = 1.0;  // k! / (k - j)!
  for (int j = 0; j <= k; ++j) {
    if (j > 0) fact_ratio *= (k - j + 1);
    tail += fact_ratio * std::pow(L, k - j) / std::pow(a, j + 1);
  }
  tail *= std::exp(-a * L);
  const double Nd = static_cast<double>(N);
  const cplx fN = std::pow(L, k) * std::exp(-s * L);
  const cplx dfN = ((k > 0 ? k * std::pow(L, k - 1) : 0.0) - s * std::pow(L, k)) * std::exp(-s * L) / Nd;
  return acc + tail - 0.5 * fN - dfN / 12.0;
}

std::vector<int> mobius_trial(std::size_t n_max) {
  std::vector<int> mu(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t m = n;
    int sign = 1;
    bool square = false;
    for (std::size_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) square = true;
      while (m % p == 0) m /= p;
      sign = -sign;
    }
    if (m > 1) sign = -sign;
    mu[n] = square ? 0 : sign;
  }
  return mu;
}

std::vector<int> divisor_count(std::size_t n_max) {
  std::vector<int> d(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= n; ++k) d[n] += (n % k == 0);
  }
  return d;
}

std::vector<cplx> convolve_naive(const std::vector<cplx>& f, const std::vector<cplx>& g) {
  const std::size_t N = std::max(f.size(), g.size());
  std::vector<cplx> h(N, 0.0);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const std::size_t e = n / d;
      if (d <= f.size() && e <= g.size()) h[n - 1] += f[d - 1] * g[e - 1];
    }
  }
  return h;
}

double disk_pullback_integral(const std::function<double(cplx)>& g, const std::function<cplx(cplx)>& Phi,
                              const std::function<cplx(cplx)>& dPhi, int n_r, int n_theta) {
  std::vector<double> x, w;
  gauss01(n_r, x, w);
  double acc = 0.0;
  for (int i = 0; i < n_r; ++i) {
    const double r = x[i];
    double ring = 0.0;
    for (int j = 0; j < n_theta; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
      ring += g(Phi(z)) * std::norm(dPhi(z));
    }
    acc += w[i] * r * std::log(1.0 / r) * ring * (2.0 * std::numbers::pi / n_theta);
  }
  return acc;
}

double affine_counting(cplx c, double r, cplx w) {
  const double d = std::abs(w - c);
  return d < r ? std::log(r / d) : 0.0;
}

double inverse_square_sum(std::size_t N) {
  double acc = 0.0;
  for (std::size_t n = N; n >= 1; --n) acc += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  return acc;
}

}  // namespace oracle
