#include "hardylab/arithmetic.hpp"

namespace hardylab {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::uint64_t candidate = 2; primes.size() < count; ++candidate) {
    bool is_prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(candidate);
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::size_t n_max) {
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= n_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::size_t primes_needed(std::size_t n_max) {
  const auto spf = smallest_prime_factors(n_max);
  std::size_t count = 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (spf[n] == n) ++count;
  }
  return count;
}

}  // namespace hardylab
