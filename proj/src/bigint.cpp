#include "fractran/bigint.hpp"

#include <algorithm>

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "BigInt conversions assume a 64-bit unsigned long");

namespace fractran {

std::optional<BigInt> parse_natural(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  BigInt out;
  out.set_str(std::string(text), 10);
  return out;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::optional<std::uint64_t> to_u64(const BigInt& n) {
  if (sgn(n) < 0 || !n.fits_ulong_p()) return std::nullopt;
  return n.get_ui();
}

}  // namespace fractran
