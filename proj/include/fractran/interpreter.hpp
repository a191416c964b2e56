#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "fractran/bigint.hpp"
#include "fractran/exponent_vector.hpp"
#include "fractran/program.hpp"

namespace fractran {

/// One application of f_P on a plain integer. Throws ZeroInput for n = 0.
std::optional<BigInt> step(const FractranProgram& program, const BigInt& n);

/// The same step on a factored value: fraction i applies when its
/// denominator's exponents are covered by those of n times its numerator.
std::optional<ExponentVector> step(const FractranProgram& program, const ExponentVector& n);

struct Halted {
  std::uint64_t steps;
  friend bool operator==(const Halted&, const Halted&) = default;
};

struct FuelExhausted {
  std::uint64_t fuel;
  friend bool operator==(const FuelExhausted&, const FuelExhausted&) = default;
};

using Outcome = std::variant<Halted, FuelExhausted>;

inline bool is_halted(const Outcome& o) { return std::holds_alternative<Halted>(o); }

struct Trace {
  std::vector<ExponentVector> values;  // n_0, n_1, ...
  std::vector<std::size_t> rules;      // rules[i] took values[i] to values[i + 1]
  Outcome outcome;

  BigInt value(std::size_t i) const { return values.at(i).value(); }
};

/// Steps a program over a dense exponent array restricted to the primes the
/// program mentions. Primes outside that set never change and are carried
/// along untouched.
class Runner {
 public:
  Runner(const FractranProgram& program, const ExponentVector& start);

  /// Applies one step; returns the index of the fraction used, or empty when
  /// no fraction applies (the value is then left unchanged).
  std::optional<std::size_t> step();

  ExponentVector value() const;
  std::uint64_t steps() const { return steps_; }

  /// e when the current value is exactly p^e.
  std::optional<Exponent> power_of(Prime p) const;

  Exponent exponent(Prime p) const;

 private:
  struct Delta {
    std::size_t slot;
    Exponent amount;
  };
  struct Rule {
    std::vector<Delta> need;  // net consumption after cancelling num against den
    std::vector<Delta> give;
  };

  std::vector<Prime> basis_;
  std::vector<Exponent> exponents_;
  ExponentVector rest_;
  std::vector<Rule> rules_;
  std::uint64_t steps_ = 0;
};

Trace run(const FractranProgram& program, const ExponentVector& n0, std::uint64_t fuel);
Trace run(const FractranProgram& program, const BigInt& n0, std::uint64_t fuel);

Outcome halts(const FractranProgram& program, const ExponentVector& n0, std::uint64_t fuel);
Outcome halts(const FractranProgram& program, const BigInt& n0, std::uint64_t fuel);

/// Exponents e for which n_i = 2^e, scanning steps 1..limit (the start value
/// is not inspected). Stops early after `max_hits` exponents.
std::vector<Exponent> powers_of_two_exponents(const FractranProgram& program, const BigInt& n0,
                                              std::uint64_t limit,
                                              std::size_t max_hits = std::numeric_limits<std::size_t>::max());

}  // namespace fractran
