#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

// Independent reference implementations used to check the library. They favour
// transparency over speed: direct sums, trial division, plain tensor rules.
namespace oracle {

using cplx = std::complex<double>;

/// sum_{n<=N} (log n)^k n^{-s} plus the Euler-Maclaurin tail through the B_2 term.
cplx brute_log_zeta(cplx s, int k, std::size_t N = 200000);

/// Moebius function by trial division, indices 0..n_max (entry 0 unused).
std::vector<int> mobius_trial(std::size_t n_max);

/// Number of divisors by direct counting, indices 0..n_max.
std::vector<int> divisor_count(std::size_t n_max);

/// Naive Dirichlet convolution.
std::vector<cplx> convolve_naive(const std::vector<cplx>& f, const std::vector<cplx>& g);

/// int_D g(Phi(z)) log(1/|z|) |Phi'(z)|^2 dA(z): Gauss-Legendre in r, trapezoid in theta.
double disk_pullback_integral(const std::function<double(cplx)>& g, const std::function<cplx(cplx)>& Phi,
                              const std::function<cplx(cplx)>& dPhi, int n_r = 200, int n_theta = 256);

/// M(w) = log(r / |w - c|) for |w - c| < r, else 0.
double affine_counting(cplx c, double r, cplx w);

/// sum_{n<=N} n^{-2}, smallest terms first.
double inverse_square_sum(std::size_t N);

}  // namespace oracle
