#include <doctest.h>

#include <random>

#include "fractran/collatz.hpp"
#include "fractran/error.hpp"
#include "fractran/exponent_vector.hpp"
#include "fractran/interpreter.hpp"
#include "fractran/program.hpp"
#include "oracles.hpp"

using namespace fractran;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Malformed;
}

}  // namespace

TEST_SUITE("fractran_core") {
  TEST_CASE("parse_program accepts fractions, integers and comments") {
    auto p = parse_program("# header\n3/2 5  # trailing\n 7/11\n");
    REQUIRE(p.size() == 3);
    CHECK(p.fractions()[1] == Fraction{5, 1});
    CHECK(p.to_string() == "3/2 5/1 7/11");
    CHECK(parse_program(p.to_string()) == p);
  }

  TEST_CASE("parse_program errors") {
    CHECK(code_of([] { parse_program(""); }) == ErrorCode::EmptyProgram);
    CHECK(code_of([] { parse_program("# only a comment"); }) == ErrorCode::EmptyProgram);
    CHECK(code_of([] { parse_program("3/0"); }) == ErrorCode::ZeroPart);
    CHECK(code_of([] { parse_program("0/2"); }) == ErrorCode::ZeroPart);
    CHECK(code_of([] { parse_program("3/x"); }) == ErrorCode::Malformed);
    CHECK(code_of([] { parse_program("-3/2"); }) == ErrorCode::Malformed);
    CHECK(code_of([] { parse_program("3//2"); }) == ErrorCode::Malformed);
  }

  TEST_CASE("fractions are kept unreduced") {
    auto p = parse_program("2/4");
    CHECK(p.fractions()[0] == Fraction{2, 4});
    CHECK(p.modulus() == 4);
    // 2 * 2/4 = 1 although 4 does not divide 2.
    CHECK(step(p, BigInt(2)) == BigInt(1));
    CHECK(step(p, factorize(2)) == factorize(1));
  }

  TEST_CASE("PRIMEGAME opening trace") {
    const std::vector<long> expected{2, 15, 825, 725, 1925, 2275, 425, 390, 330, 290, 770};
    auto trace = run(primegame(), BigInt(2), 10);
    REQUIRE(trace.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(trace.value(i) == expected[i]);
    CHECK(std::holds_alternative<FuelExhausted>(trace.outcome));
    CHECK(primegame().modulus() == BigInt("6469693230"));
  }

  TEST_CASE("PRIMEGAME powers of two skip the start value") {
    auto exps = powers_of_two_exponents(primegame(), 2, 10000000, 4);
    CHECK(exps == std::vector<Exponent>{2, 3, 5, 7});
  }

  TEST_CASE("halting and trivial immortality") {
    CHECK(halts(parse_program("1/2"), BigInt(8), 100) == Outcome{Halted{3}});
    CHECK(halts(parse_program("3/2"), BigInt(1), 100) == Outcome{Halted{0}});
    CHECK(halts(parse_program("55/1"), BigInt(1), 5) == Outcome{FuelExhausted{5}});
    CHECK(parse_program("3/2 55/1").is_trivially_immortal());
    CHECK_FALSE(parse_program("3/2 5/3").is_trivially_immortal());
    CHECK(code_of([] { step(parse_program("1/2"), BigInt(0)); }) == ErrorCode::ZeroInput);
  }

  TEST_CASE("integer, exponent-vector and dense steps agree with the definition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      auto small = oracle::random_program(rng);
      auto program = parse_program(oracle::to_text(small));
      for (std::uint64_t n = 1; n <= 200; ++n) {
        auto want = oracle::step(small, n);
        auto got = step(program, from_u64(n));
        auto got_vec = step(program, factorize(from_u64(n)));
        Runner runner(program, factorize(from_u64(n)));
        auto rule = runner.step();
        REQUIRE(got.has_value() == want.has_value());
        REQUIRE(got_vec.has_value() == want.has_value());
        REQUIRE(rule.has_value() == want.has_value());
        if (want) {
          CHECK(*got == from_u64(*want));
          CHECK(got_vec->value() == from_u64(*want));
          CHECK(runner.value().value() == from_u64(*want));
        }
      }
    }
  }

  TEST_CASE("residue entries match a direct search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      auto small = oracle::random_program(rng, 4, 12);
      auto program = parse_program(oracle::to_text(small));
      std::uint64_t d = program.modulus().get_ui();
      auto table = program.residue_table();
      REQUIRE(table.size() == d);
      for (std::uint64_t n = 1; n <= d; ++n) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < small.size() && !first; ++i) {
          if ((n * small[i].num) % small[i].den == 0) first = i;
        }
        const auto& entry = table[n - 1];
        REQUIRE(entry.has_value() == first.has_value());
        if (!first) continue;
        const auto& f = small[*first];
        CHECK(entry->rule == *first);
        CHECK(entry->multiplier == from_u64(f.num * (d / f.den)));
        CHECK(entry->offset == from_u64(n * f.num / f.den));
      }
    }
  }

  TEST_CASE("residue table refuses huge moduli") {
    CHECK(code_of([] { primegame().residue_table(); }) == ErrorCode::TooLarge);
    auto e = primegame().residue_entry(2);
    REQUIRE(e);
    CHECK(e->offset == 15);
  }

  TEST_CASE("Collatz form reproduces the step") {
    auto form = derive_collatz_form(parse_program("3/2"));
    CHECK(form.modulus() == 2);
    CHECK(form.branch(0) == CollatzBranch{Rational(3, 2), Rational(0)});
    CHECK(form.branch(1) == CollatzBranch{Rational(0), Rational(1)});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      auto small = oracle::random_program(rng, 5, 20);
      auto program = parse_program(oracle::to_text(small));
      CollatzForm f(program);
      for (std::uint64_t n = 1; n <= 300; ++n) {
        auto want = oracle::step(small, n);
        CHECK(f.apply(from_u64(n)) == from_u64(want.value_or(1)));
      }
    }
  }

  TEST_CASE("factorize round-trips") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1ULL << 40);
    for (int i = 0; i < 500; ++i) {
      std::uint64_t n = dist(rng);
      auto v = factorize(from_u64(n));
      CHECK(v.value() == from_u64(n));
      for (const auto& [p, e] : v.entries()) CHECK(is_prime(p));
    }
    CHECK(factorize(BigInt(360)).factored() == "2^3·3^2·5");
    CHECK(factorize(BigInt(1)).factored() == "1");
    CHECK(code_of([] { factorize(BigInt(0)); }) == ErrorCode::ZeroInput);
  }

  TEST_CASE("exponent vectors reject composite bases") {
    CHECK(code_of([] { ExponentVector({{4, 1}}); }) == ErrorCode::Malformed);
    ExponentVector v({{3, 1}, {2, 2}, {3, 1}});
    CHECK(v.exponent(3) == 2);
    CHECK(v.value() == 36);
  }
}
