#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractran/bigint.hpp"
#include "fractran/exponent_vector.hpp"

namespace fractran {

/// A fraction exactly as written in the source; never reduced.
struct Fraction {
  BigInt num;
  BigInt den;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The step of a program restricted to one residue class n (1 <= n <= d):
/// f(m) = floor((m-1)/d) * multiplier + offset for every m congruent to n.
struct ResidueEntry {
  BigInt multiplier;  // p'_n = p_i * (d / q_i)
  BigInt offset;      // o_n = n * p_i / q_i
  std::size_t rule;   // index of the first fraction that applies to n

  friend bool operator==(const ResidueEntry&, const ResidueEntry&) = default;
};

/// Residue tables and explicit rule listings are only materialised up to
/// this modulus; larger ones are queried per class.
inline constexpr unsigned long kMaxMaterializedModulus = 1UL << 20;

class FractranProgram {
 public:
  /// Throws EmptyProgram or ZeroPart.
  explicit FractranProgram(std::vector<Fraction> fractions);

  const std::vector<Fraction>& fractions() const { return fractions_; }
  std::size_t size() const { return fractions_.size(); }

  /// Least common multiple of the denominators.
  const BigInt& modulus() const { return modulus_; }

  const ExponentVector& numerator_factors(std::size_t i) const { return num_factors_[i]; }
  const ExponentVector& denominator_factors(std::size_t i) const { return den_factors_[i]; }

  /// Residue-class entry for 1 <= n <= modulus(); empty when no fraction
  /// applies. Computed on demand since the modulus is often astronomically
  /// large (PRIMEGAME has d = 6469693230).
  std::optional<ResidueEntry> residue_entry(const BigInt& n) const;

  /// The whole table, index 0 holding class 1. Throws TooLarge above
  /// kMaxMaterializedModulus.
  std::vector<std::optional<ResidueEntry>> residue_table() const;

  /// Some fraction is an integer (its denominator divides its numerator),
  /// so a step is always possible.
  bool is_trivially_immortal() const;

  /// Space-separated "a/b" tokens, denominators always written.
  std::string to_string() const;

  friend bool operator==(const FractranProgram& a, const FractranProgram& b) {
    return a.fractions_ == b.fractions_;
  }

 private:
  std::vector<Fraction> fractions_;
  BigInt modulus_;
  std::vector<ExponentVector> num_factors_;
  std::vector<ExponentVector> den_factors_;
};

/// Whitespace-separated tokens "a/b" or "a" (meaning a/1); '#' comments run
/// to end of line. Throws EmptyProgram, ZeroPart or Malformed.
FractranProgram parse_program(std::string_view text);

/// Conway's prime-generating program.
const FractranProgram& primegame();
inline constexpr std::string_view kPrimegameText =
    "17/91 78/85 19/51 23/38 29/33 77/29 95/23 77/19 1/17 11/13 13/11 15/14 15/2 55/1";

}  // namespace fractran
