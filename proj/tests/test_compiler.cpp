#include <doctest.h>

#include <map>
#include <random>

#include "fractran/compiler.hpp"
#include "fractran/error.hpp"
#include "fractran/interpreter.hpp"
#include "oracles.hpp"

using namespace fractran;
using namespace fractran::compiler;

namespace {

ExponentVector ev(std::vector<ExponentVector::Entry> e) { return ExponentVector(std::move(e)); }

}  // namespace

TEST_SUITE("tm2fractran") {
  TEST_CASE("prime allocation") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto a = allocate_primes(tm);
    CHECK(a.l == 2);
    CHECK(a.h == 3);
    CHECK(a.r == 5);
    CHECK(a.l2 == 7);
    CHECK(a.h2 == 11);
    CHECK(a.r2 == 13);
    CHECK(a.flags() == std::vector<Prime>{17, 19, 23, 29, 31, 37});
    // The next primes after 37 (the twelfth prime) are 41, 43, 47.
    CHECK(a.state_primes == std::vector<Prime>{41, 43, 47});

    auto big = tm::normalize_no_self_loops(tm::parse_tm("start a\na 0 -> a 1 R\nb 1 -> c 0 L\n"));
    auto ab = allocate_primes(big);
    CHECK(ab.state_primes.size() == 6);
    std::vector<Prime> all{ab.l, ab.h, ab.r, ab.l2, ab.h2, ab.r2};
    for (Prime p : ab.flags()) all.push_back(p);
    for (Prime p : ab.state_primes) all.push_back(p);
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }

  TEST_CASE("fraction families of the example machine") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto compiled = compile(tm);
    REQUIRE(compiled.program.size() == 64);
    std::map<Family, int> count;
    for (Family f : compiled.families) ++count[f];
    // 21 flag pairs + 6 state pairs + 3 head pairs.
    CHECK(count[Family::Illegal] == 30);
    CHECK(count[Family::MoveLeft] == 10);
    CHECK(count[Family::MoveRight] == 10);
    CHECK(count[Family::Copy] == 6);
    CHECK(count[Family::TransHead] == 3);
    CHECK(count[Family::Term] == 3);
    CHECK(count[Family::TransBlank] == 2);
    CHECK(std::is_sorted(compiled.families.begin(), compiled.families.end()));

    const auto& fs = compiled.program.fractions();
    // delta(b,1) = (a0,0,R): p_a0 * mR0 / (p_b * h).
    CHECK(fs[30 + 26 + 2] == Fraction{41 * 23, 47 * 3});
    // delta(a0,0) = (b,1,R): p_b * h' * mR0 / p_a0.
    CHECK(fs[62] == Fraction{47 * 11 * 23, 41});
    CHECK(fs[0] == Fraction{1, 17 * 17});
    CHECK(fs[1] == Fraction{1, 17 * 19});
    // First move-left schema at x = 0 and x = 1.
    CHECK(fs[30] == Fraction{19 * 7, 17 * 4});
    CHECK(fs[35] == Fraction{17 * 7, 19 * 4});
  }

  TEST_CASE("empty machine") {
    auto compiled = compile(tm::parse_tm("start q\n"));
    std::map<Family, int> count;
    for (Family f : compiled.families) ++count[f];
    CHECK(count[Family::TransHead] == 0);
    CHECK(count[Family::TransBlank] == 0);
    CHECK(count[Family::Term] == 1);
    CHECK(compiled.program.size() == 21 + 1 + 3 + 10 + 10 + 6 + 1);
  }

  TEST_CASE("self transitions are refused") {
    auto tm = tm::parse_tm("start q\nq 0 -> q 1 R\n");
    try {
      compile(tm);
      FAIL("compiled a self-looping machine");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SelfTransition);
    }
    CHECK(compile(tm::normalize_no_self_loops(tm)).allocation.state_primes.size() == 2);
  }

  TEST_CASE("configuration encoding") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto a = allocate_primes(tm);
    CHECK(encode_config(a, tm::parse_configuration(tm, "1 b 1001")) == ev({{47, 1}, {2, 1}, {3, 1}, {5, 4}}));
    CHECK(encode_config(a, tm::parse_configuration(tm, "10 a0 001")) == ev({{41, 1}, {2, 2}, {5, 2}}));
    CHECK(encode_config(a, tm::Configuration{1, 0, 0, 0}) == ev({{43, 1}}));
  }

  TEST_CASE("listing parses back and is deterministic") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto compiled = compile(tm);
    auto listing = format_listing(tm, compiled);
    CHECK(parse_program(listing) == compiled.program);
    CHECK(listing.find("# p_q 47 = state b\n") != std::string::npos);
    CHECK(format_listing(tm, compile(tm::parse_tm(oracle::kExampleMachine))) == listing);
  }

  TEST_CASE("example trace value by value") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto compiled = compile(tm);
    auto n0 = encode_config(compiled.allocation, tm::parse_configuration(tm, "1 b 1001"));
    auto trace = run(compiled.program, n0, 1000);
    REQUIRE(trace.outcome == Outcome{Halted{23}});
    const std::map<std::size_t, ExponentVector> expected{
        {1, ev({{23, 1}, {41, 1}, {2, 1}, {5, 4}})},
        {3, ev({{23, 1}, {41, 1}, {2, 1}, {13, 2}})},
        {4, ev({{29, 1}, {41, 1}, {7, 2}, {13, 2}})},
        {5, ev({{31, 1}, {41, 1}, {7, 2}, {13, 2}})},
        {10, ev({{41, 1}, {2, 2}, {5, 2}})},
        {11, ev({{23, 1}, {47, 1}, {2, 2}, {11, 1}, {5, 2}})},
        {12, ev({{29, 1}, {47, 1}, {2, 2}, {11, 1}, {13, 1}})},
        {14, ev({{29, 1}, {47, 1}, {7, 4}, {11, 1}, {13, 1}})},
        {16, ev({{31, 1}, {47, 1}, {7, 5}, {13, 1}})},
        {23, ev({{47, 1}, {2, 5}, {5, 1}})},
    };
    for (const auto& [i, v] : expected) CHECK_MESSAGE(trace.values[i] == v, "step " << i);
  }

  TEST_CASE("check_simulation on the example and the empty machine") {
    auto tm = tm::parse_tm(oracle::kExampleMachine);
    auto v = check_simulation(tm, tm::parse_configuration(tm, "1 b 1001"), 10000);
    REQUIRE(std::holds_alternative<Verified>(v));
    CHECK(std::get<Verified>(v).tm_steps == 2);
    CHECK(std::get<Verified>(v).fractran_steps == 23);
    CHECK(std::get<Verified>(v).halted);

    auto empty = tm::parse_tm("start q\n");
    auto e = check_simulation(empty, tm::Configuration{0, 6, 1, 9}, 100);
    REQUIRE(std::holds_alternative<Verified>(e));
    CHECK(std::get<Verified>(e).fractran_steps == 1);
  }

  TEST_CASE("simulation on random machines") {
    std::mt19937_64 rng(29);
    int halted = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto tm = tm::normalize_no_self_loops(oracle::random_machine(rng, 2, true));
      auto c = oracle::random_configuration(rng, tm.state_count(), 6);
      auto v = check_simulation(tm, c, 50000000, 8);
      if (auto* bad = std::get_if<CounterExample>(&v)) FAIL(bad->details);
      REQUIRE(std::holds_alternative<Verified>(v));
      halted += std::get<Verified>(v).halted;
    }
    CHECK(halted > 20);
  }

  TEST_CASE("example machine's program halts on every small start value") {
    auto compiled = compile(tm::parse_tm(oracle::kExampleMachine));
    for (unsigned long n = 1; n <= 4096; ++n) {
      auto o = halts(compiled.program, BigInt(n), 1000000);
      CHECK_MESSAGE(is_halted(o), "n = " << n);
    }
  }

  TEST_CASE("every value is legal along runs from encoded configurations") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
      auto tm = tm::normalize_no_self_loops(oracle::random_machine(rng, 3, true));
      auto compiled = compile(tm);
      auto n0 = encode_config(compiled.allocation, oracle::random_configuration(rng, tm.state_count(), 6));
      auto trace = run(compiled.program, n0, 20000);
      for (std::size_t i = 0; i < trace.values.size(); ++i) {
        REQUIRE_MESSAGE(is_legal(compiled.allocation, trace.values[i]), "trial " << trial << ", step " << i);
      }
    }
  }
}
