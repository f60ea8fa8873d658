#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hardylab/errors.hpp"

namespace hardylab {

/// Truncation of a point of the infinite polytorus: one unimodular value per prime
/// p_1 = 2, p_2 = 3, ..., p_J. Extended completely multiplicatively to integers.
class Character {
 public:
  /// Throws PreconditionError if some |value| differs from 1 by more than 1e-12.
  explicit Character(std::vector<cplx> prime_values);

  /// chi(p_j) = exp(i theta_j).
  static Character from_angles(const std::vector<double>& angles);
  /// The trivial character on J primes.
  static Character trivial(std::size_t n_primes);

  std::size_t n_primes() const noexcept { return values_.size(); }
  const std::vector<cplx>& prime_values() const noexcept { return values_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  /// chi(n); throws PreconditionError if n has a prime factor beyond p_J.
  cplx operator()(std::uint64_t n) const;

  /// chi(1..N) in one sieve pass; throws like operator().
  std::vector<cplx> table(std::size_t n_max) const;

  /// chi^k (pointwise power), used for the c_0 > 0 composition rule.
  Character power(int k) const;

 private:
  std::vector<cplx> values_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace hardylab
