#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fractran {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses a non-empty run of ASCII decimal digits. Signs, whitespace and
/// separators are rejected.
std::optional<BigInt> parse_natural(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

BigInt lcm(const BigInt& a, const BigInt& b);

/// Empty when `n` is negative or does not fit.
std::optional<std::uint64_t> to_u64(const BigInt& n);

inline BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace fractran
