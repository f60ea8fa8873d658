#include "hardylab/character.hpp"

#include <cmath>
#include <string>

#include "hardylab/arithmetic.hpp"

namespace hardylab {

Character::Character(std::vector<cplx> prime_values)
    : values_(std::move(prime_values)), primes_(first_primes(values_.size())) {
  if (values_.empty()) throw PreconditionError("Character: needs at least one prime");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (std::abs(std::abs(values_[j]) - 1.0) > 1e-12) {
      throw PreconditionError("Character: value at prime " + std::to_string(primes_[j]) +
                              " is not unimodular");
    }
  }
}

Character Character::from_angles(const std::vector<double>& angles) {
  std::vector<cplx> v;
  v.reserve(angles.size());
  for (double a : angles) v.push_back(std::polar(1.0, a));
  return Character(std::move(v));
}

Character Character::trivial(std::size_t n_primes) {
  return Character(std::vector<cplx>(n_primes, cplx(1.0, 0.0)));
}

cplx Character::operator()(std::uint64_t n) const {
  if (n == 0) throw PreconditionError("Character: chi(0) is undefined");
  cplx acc = 1.0;
  for (std::size_t j = 0; j < primes_.size() && n > 1; ++j) {
    while (n % primes_[j] == 0) {
      n /= primes_[j];
      acc *= values_[j];
    }
  }
  if (n != 1) {
    throw PreconditionError("Character: argument has a prime factor beyond p_J (J = " +
                            std::to_string(primes_.size()) + ")");
  }
  return acc;
}

std::vector<cplx> Character::table(std::size_t n_max) const {
  std::vector<cplx> out(n_max + 1, cplx(0.0, 0.0));
  if (n_max == 0) return out;
  const auto spf = smallest_prime_factors(n_max);
  // index of each retained prime
  std::vector<int> prime_index(n_max + 1, -1);
  for (std::size_t j = 0; j < primes_.size(); ++j) {
    if (primes_[j] <= n_max) prime_index[primes_[j]] = static_cast<int>(j);
  }
  out[1] = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::size_t p = spf[n];
    if (prime_index[p] < 0) {
      throw PreconditionError("Character: n = " + std::to_string(n) +
                              " does not factor over the first " +
                              std::to_string(primes_.size()) + " primes");
    }
    out[n] = values_[static_cast<std::size_t>(prime_index[p])] * out[n / p];
  }
  return out;
}

Character Character::power(int k) const {
  std::vector<cplx> v;
  v.reserve(values_.size());
  for (const cplx& z : values_) v.push_back(std::pow(z, k));
  // renormalize against rounding drift
  for (cplx& z : v) z /= std::abs(z);
  return Character(std::move(v));
}

}  // namespace hardylab
