#pragma once

// Independent reference models used as test oracles. None of them call into
// the library's arithmetic except to convert final results for comparison.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fractran/program.hpp"
#include "fractran/turing.hpp"

namespace oracle {

using fractran::BigInt;

struct SmallFraction {
  std::uint64_t num, den;
};

/// Fractran step on machine integers, straight from the definition.
inline std::optional<std::uint64_t> step(const std::vector<SmallFraction>& program, std::uint64_t n) {
  for (const auto& f : program) {
    unsigned __int128 product = static_cast<unsigned __int128>(n) * f.num;
    if (product % f.den == 0) return static_cast<std::uint64_t>(product / f.den);
  }
  return std::nullopt;
}

inline std::string to_text(const std::vector<SmallFraction>& program) {
  std::string out;
  for (const auto& f : program) out += std::to_string(f.num) + "/" + std::to_string(f.den) + " ";
  return out;
}

/// Up to `max_len` fractions with parts in 1..`max_part`.
inline std::vector<SmallFraction> random_program(std::mt19937_64& rng, std::size_t max_len = 6,
                                                 std::uint64_t max_part = 30) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::uint64_t> part(1, max_part);
  std::vector<SmallFraction> out(len(rng));
  for (auto& f : out) f = {part(rng), part(rng)};
  return out;
}

/// Explicit tape: map from cell index to symbol, head at `pos`.
struct WordTape {
  std::map<long long, int> cells;
  long long pos = 0;
  fractran::tm::StateId state = 0;

  static WordTape from(const fractran::tm::Configuration& c) {
    WordTape t;
    t.state = c.state;
    t.cells[0] = c.head;
    std::string left = c.left.get_str(2), right = c.right.get_str(2);
    for (std::size_t i = 0; i < left.size(); ++i) t.cells[-1 - static_cast<long long>(i)] = left[left.size() - 1 - i] - '0';
    for (std::size_t i = 0; i < right.size(); ++i) t.cells[1 + static_cast<long long>(i)] = right[right.size() - 1 - i] - '0';
    return t;
  }

  int read() const {
    auto it = cells.find(pos);
    return it == cells.end() ? 0 : it->second;
  }

  bool step(const fractran::tm::UnaryTM& tm) {
    const auto& t = tm.delta(state, static_cast<std::uint8_t>(read()));
    if (!t) return false;
    cells[pos] = t->write;
    pos += t->move == fractran::tm::Move::Left ? -1 : 1;
    state = t->next;
    return true;
  }

  fractran::tm::Configuration to_configuration() const {
    fractran::tm::Configuration c;
    c.state = state;
    c.head = static_cast<std::uint8_t>(read());
    for (const auto& [cell, v] : cells) {
      if (v == 0 || cell == pos) continue;
      if (cell < pos) {
        mpz_setbit(c.left.get_mpz_t(), static_cast<unsigned long>(pos - 1 - cell));
      } else {
        mpz_setbit(c.right.get_mpz_t(), static_cast<unsigned long>(cell - pos - 1));
      }
    }
    return c;
  }
};

/// Every (state, symbol) pair is defined with probability `density`.
inline fractran::tm::UnaryTM random_machine(std::mt19937_64& rng, std::size_t states, bool allow_self,
                                            double density = 0.75) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
  fractran::tm::UnaryTM tm(names, 0);
  std::bernoulli_distribution defined(density), coin(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, states - 1);
  for (std::size_t q = 0; q < states; ++q) {
    for (std::uint8_t s = 0; s < 2; ++s) {
      if (!defined(rng)) continue;
      std::size_t next = pick(rng);
      if (!allow_self && states > 1) {
        while (next == q) next = pick(rng);
      } else if (!allow_self) {
        continue;
      }
      tm.define(q, s,
                {next, static_cast<std::uint8_t>(coin(rng)), coin(rng) ? fractran::tm::Move::Left
                                                                        : fractran::tm::Move::Right});
    }
  }
  return tm;
}

/// Tape halves with at most `bits` bits each.
inline fractran::tm::Configuration random_configuration(std::mt19937_64& rng, std::size_t states, unsigned bits) {
  std::uniform_int_distribution<unsigned long> half(0, (1UL << bits) - 1);
  std::uniform_int_distribution<std::size_t> pick(0, states - 1);
  std::bernoulli_distribution coin(0.5);
  return {pick(rng), BigInt(half(rng)), static_cast<std::uint8_t>(coin(rng)), BigInt(half(rng))};
}

inline constexpr const char* kExampleMachine =
    "start b\n"
    "states a0 a1 b\n"
    "a0 0 -> b 1 R\n"
    "a1 0 -> b 1 R\n"
    "a0 1 -> a1 0 R\n"
    "a1 1 -> a0 0 R\n"
    "b 1 -> a0 0 R\n";

}  // namespace oracle
