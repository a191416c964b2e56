#include "fractran/exponent_vector.hpp"

#include <algorithm>
#include <limits>

#include "fractran/error.hpp"

namespace fractran {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw Error(ErrorCode::Overflow, "exponent exceeds 64 bits");
  }
  return a + b;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [p, e] : entries) {
    if (e == 0) continue;
    if (!is_prime(p)) throw Error(ErrorCode::Malformed, std::to_string(p) + " is not prime");
    if (!entries_.empty() && entries_.back().first == p) {
      entries_.back().second = checked_add(entries_.back().second, e);
    } else {
      entries_.emplace_back(p, e);
    }
  }
}

ExponentVector ExponentVector::prime_power(Prime p, Exponent e) {
  return ExponentVector({{p, e}});
}

ExponentVector ExponentVector::from_sorted(std::vector<Entry> entries) {
  ExponentVector out;
  out.entries_ = std::move(entries);
  return out;
}

Exponent ExponentVector::exponent(Prime p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{p, 0});
  return (it != entries_.end() && it->first == p) ? it->second : 0;
}

void ExponentVector::set(Prime p, Exponent e) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{p, 0});
  bool present = it != entries_.end() && it->first == p;
  if (e == 0) {
    if (present) entries_.erase(it);
    return;
  }
  if (present) {
    it->second = e;
    return;
  }
  if (!is_prime(p)) throw Error(ErrorCode::Malformed, std::to_string(p) + " is not prime");
  entries_.insert(it, Entry{p, e});
}

bool ExponentVector::divides(const ExponentVector& n) const {
  auto it = n.entries_.begin();
  for (const auto& [p, e] : entries_) {
    while (it != n.entries_.end() && it->first < p) ++it;
    if (it == n.entries_.end() || it->first != p || it->second < e) return false;
  }
  return true;
}

ExponentVector& ExponentVector::operator*=(const ExponentVector& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, checked_add(a->second, b->second));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

ExponentVector ExponentVector::divided_by(const ExponentVector& divisor) const {
  ExponentVector out = *this;
  for (const auto& [p, e] : divisor.entries_) {
    Exponent have = out.exponent(p);
    if (have < e) throw Error(ErrorCode::Malformed, "inexact exponent-vector division");
    out.set(p, have - e);
  }
  return out;
}

BigInt ExponentVector::value() const {
  BigInt out = 1;
  BigInt power;
  for (const auto& [p, e] : entries_) {
    if (e > std::numeric_limits<unsigned long>::max()) {
      throw Error(ErrorCode::TooLarge, "exponent too large to expand");
    }
    mpz_ui_pow_ui(power.get_mpz_t(), p, e);
    out *= power;
  }
  return out;
}

std::string ExponentVector::factored() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : entries_) {
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

ExponentVector factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::ZeroInput, "cannot factor " + to_string(n));
  std::vector<ExponentVector::Entry> found;
  BigInt rest = n;
  auto strip = [&](std::uint64_t d) {
    Exponent e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) found.emplace_back(d, e);
  };
  strip(2);
  std::uint64_t d = 3;
  // Big remainders: divide with GMP until what is left fits a machine word.
  for (; !rest.fits_ulong_p(); d += 2) {
    if (BigInt(static_cast<unsigned long>(d)) * d > rest) break;
    strip(d);
  }
  if (rest.fits_ulong_p()) {
    std::uint64_t r = rest.get_ui();
    for (; d <= r / d; d += 2) {
      Exponent e = 0;
      while (r % d == 0) {
        r /= d;
        ++e;
      }
      if (e > 0) found.emplace_back(d, e);
    }
    if (r > 1) found.emplace_back(r, 1);
  } else {
    // Trial division ran past sqrt(rest), so rest is a prime beyond 64 bits.
    throw Error(ErrorCode::TooLarge, "prime factor exceeds 64 bits");
  }
  // Trial division finds primes in increasing order.
  return ExponentVector::from_sorted(std::move(found));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (1ULL << 32)) {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  // Baillie-PSW inside GMP is exact below 2^64.
  return mpz_probab_prime_p(from_u64(n).get_mpz_t(), 25) != 0;
}

Prime next_prime(Prime n) {
  Prime c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace fractran
