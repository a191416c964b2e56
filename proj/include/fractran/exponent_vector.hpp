#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fractran/bigint.hpp"

namespace fractran {

using Prime = std::uint64_t;
using Exponent = std::uint64_t;

/// A positive natural stored by its factorization: a sorted list of
/// (prime, exponent) pairs with every exponent >= 1. The empty vector is 1.
class ExponentVector {
 public:
  using Entry = std::pair<Prime, Exponent>;

  ExponentVector() = default;

  /// Entries may come in any order; zero exponents are dropped and repeated
  /// primes are merged. Throws Malformed if a key is not prime.
  explicit ExponentVector(std::vector<Entry> entries);

  static ExponentVector prime_power(Prime p, Exponent e);

  /// Skips validation: `entries` must already be sorted by prime, hold only
  /// primes, and have no zero exponents.
  static ExponentVector from_sorted(std::vector<Entry> entries);

  Exponent exponent(Prime p) const;
  void set(Prime p, Exponent e);

  bool is_one() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }

  /// True when this number divides `n`.
  bool divides(const ExponentVector& n) const;

  ExponentVector& operator*=(const ExponentVector& other);
  friend ExponentVector operator*(ExponentVector a, const ExponentVector& b) { return a *= b; }

  /// Exact quotient; requires divisor.divides(*this).
  ExponentVector divided_by(const ExponentVector& divisor) const;

  BigInt value() const;

  /// "2^3·5·11^2"; the empty vector renders as "1".
  std::string factored() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Trial division. Throws ZeroInput for 0 and TooLarge if a prime factor
/// does not fit in 64 bits.
ExponentVector factorize(const BigInt& n);

bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than `n`.
Prime next_prime(Prime n);

}  // namespace fractran
