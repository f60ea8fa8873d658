#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hardylab {

/// The first `count` primes, in increasing order.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Smallest prime factor of every n in [0, n_max]; entries 0 and 1 are 0.
std::vector<std::uint32_t> smallest_prime_factors(std::size_t n_max);

/// Number of primes needed so that every n <= n_max factors over them,
/// i.e. pi(n_max).
std::size_t primes_needed(std::size_t n_max);

}  // namespace hardylab
