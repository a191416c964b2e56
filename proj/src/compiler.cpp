#include "fractran/compiler.hpp"

#include "fractran/error.hpp"
#include "fractran/interpreter.hpp"

namespace fractran::compiler {

std::vector<Prime> PrimeAllocation::flags() const {
  return {move_left[0], move_left[1], move_right[0], move_right[1], copy[0], copy[1]};
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Illegal: return "illegal";
    case Family::MoveLeft: return "move-left";
    case Family::MoveRight: return "move-right";
    case Family::Copy: return "copy";
    case Family::TransHead: return "trans-head";
    case Family::Term: return "term";
    case Family::TransBlank: return "trans-blank";
  }
  return "?";
}

PrimeAllocation allocate_primes(const tm::UnaryTM& tm) {
  Prime p = 1;
  auto next = [&] { return p = next_prime(p); };
  PrimeAllocation a{};
  a.l = next();
  a.h = next();
  a.r = next();
  a.l2 = next();
  a.h2 = next();
  a.r2 = next();
  a.move_left[0] = next();
  a.move_left[1] = next();
  a.move_right[0] = next();
  a.move_right[1] = next();
  a.copy[0] = next();
  a.copy[1] = next();
  for (std::size_t q = 0; q < tm.state_count(); ++q) a.state_primes.push_back(next());
  return a;
}

namespace {

class Builder {
 public:
  void add(Family family, std::vector<ExponentVector::Entry> num, std::vector<ExponentVector::Entry> den) {
    fractions_.push_back({ExponentVector(std::move(num)).value(), ExponentVector(std::move(den)).value()});
    families_.push_back(family);
  }

  void illegal_pairs(const std::vector<Prime>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (std::size_t j = i; j < primes.size(); ++j) add(Family::Illegal, {}, {{primes[i], 1}, {primes[j], 1}});
    }
  }

  std::vector<Fraction> fractions_;
  std::vector<Family> families_;
};

}  // namespace

CompiledProgram compile(const tm::UnaryTM& tm) {
  if (tm.has_self_transition()) {
    throw Error(ErrorCode::SelfTransition, "machine has a self-transition; normalize it first");
  }
  const PrimeAllocation a = allocate_primes(tm);
  const Prime l = a.l, h = a.h, r = a.r, l2 = a.l2, h2 = a.h2, r2 = a.r2;
  Builder b;

  b.illegal_pairs(a.flags());
  b.illegal_pairs(a.state_primes);
  b.illegal_pairs({h, h2});

  // Moving left halves L into l', doubles R into r', and shifts the heads.
  for (int x = 0; x < 2; ++x) {
    const Prime m = a.move_left[x], m1 = a.move_left[1 - x];
    b.add(Family::MoveLeft, {{m1, 1}, {l2, 1}}, {{m, 1}, {l, 2}});
    b.add(Family::MoveLeft, {{m1, 1}, {r2, 2}}, {{m, 1}, {r, 1}});
    b.add(Family::MoveLeft, {{m1, 1}, {r2, 1}}, {{m, 1}, {h2, 1}});
    b.add(Family::MoveLeft, {{m1, 1}, {h, 1}}, {{m, 1}, {l, 1}});
    b.add(Family::MoveLeft, {{a.copy[0], 1}}, {{m, 1}});
  }
  for (int x = 0; x < 2; ++x) {
    const Prime m = a.move_right[x], m1 = a.move_right[1 - x];
    b.add(Family::MoveRight, {{m1, 1}, {r2, 1}}, {{m, 1}, {r, 2}});
    b.add(Family::MoveRight, {{m1, 1}, {l2, 2}}, {{m, 1}, {l, 1}});
    b.add(Family::MoveRight, {{m1, 1}, {l2, 1}}, {{m, 1}, {h2, 1}});
    b.add(Family::MoveRight, {{m1, 1}, {h, 1}}, {{m, 1}, {r, 1}});
    b.add(Family::MoveRight, {{a.copy[0], 1}}, {{m, 1}});
  }
  for (int x = 0; x < 2; ++x) {
    const Prime c = a.copy[x], c1 = a.copy[1 - x];
    b.add(Family::Copy, {{c1, 1}, {l, 1}}, {{c, 1}, {l2, 1}});
    b.add(Family::Copy, {{c1, 1}, {r, 1}}, {{c, 1}, {r2, 1}});
    b.add(Family::Copy, {}, {{c, 1}});
  }

  auto transitions = [&](Family family, std::uint8_t symbol) {
    for (tm::StateId q = 0; q < tm.state_count(); ++q) {
      const auto& t = tm.delta(q, symbol);
      if (!t) continue;
      Prime flag = t->move == tm::Move::Left ? a.move_left[0] : a.move_right[0];
      std::vector<ExponentVector::Entry> den{{a.state_primes[q], 1}};
      if (symbol == 1) den.emplace_back(h, 1);
      b.add(family, {{a.state_primes[t->next], 1}, {h2, t->write}, {flag, 1}}, std::move(den));
    }
  };
  transitions(Family::TransHead, 1);
  for (tm::StateId q = 0; q < tm.state_count(); ++q) b.add(Family::Term, {}, {{a.state_primes[q], 1}, {h, 1}});
  transitions(Family::TransBlank, 0);

  return {FractranProgram(std::move(b.fractions_)), a, std::move(b.families_)};
}

ExponentVector encode_config(const PrimeAllocation& a, const tm::Configuration& c) {
  auto exponent = [](const BigInt& v) {
    auto e = to_u64(v);
    if (!e) throw Error(ErrorCode::TooLarge, "tape half does not fit a 64-bit exponent");
    return *e;
  };
  return ExponentVector({{a.l, exponent(c.left)},
                         {a.state_primes.at(c.state), 1},
                         {a.h, c.head},
                         {a.r, exponent(c.right)}});
}

std::string format_listing(const tm::UnaryTM& tm, const CompiledProgram& compiled) {
  const PrimeAllocation& a = compiled.allocation;
  std::string out = "# unary TM with " + std::to_string(tm.state_count()) + " states, " +
                    std::to_string(compiled.program.size()) + " fractions\n";
  auto role = [&](std::string_view name, Prime p, std::string_view what) {
    out += "# " + std::string(name) + " " + std::to_string(p) + " = " + std::string(what) + "\n";
  };
  role("l", a.l, "left tape");
  role("h", a.h, "head");
  role("r", a.r, "right tape");
  role("l'", a.l2, "left tape (temporary)");
  role("h'", a.h2, "head (temporary)");
  role("r'", a.r2, "right tape (temporary)");
  role("mL0", a.move_left[0], "move-left flag 0");
  role("mL1", a.move_left[1], "move-left flag 1");
  role("mR0", a.move_right[0], "move-right flag 0");
  role("mR1", a.move_right[1], "move-right flag 1");
  role("c0", a.copy[0], "copy flag 0");
  role("c1", a.copy[1], "copy flag 1");
  for (tm::StateId q = 0; q < tm.state_count(); ++q) role("p_q", a.state_primes[q], "state " + tm.name(q));
  const auto& fs = compiled.program.fractions();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += fractran::to_string(fs[i].num) + "/" + fractran::to_string(fs[i].den) + "  # " +
           std::string(family_name(compiled.families[i])) + "\n";
  }
  return out;
}

bool is_legal(const PrimeAllocation& a, const ExponentVector& n) {
  Exponent flags = 0;
  for (Prime p : a.flags()) flags += n.exponent(p);
  Exponent states = 0;
  for (Prime p : a.state_primes) states += n.exponent(p);
  return flags <= 1 && states <= 1 && n.exponent(a.h) <= 1 && n.exponent(a.h2) <= 1;
}

SimulationVerdict check_simulation(const tm::UnaryTM& tm, const tm::Configuration& c, std::uint64_t fuel,
                                   std::uint64_t max_tm_steps) {
  const CompiledProgram compiled = compile(tm);
  const PrimeAllocation& a = compiled.allocation;
  Runner runner(compiled.program, encode_config(a, c));
  const std::vector<Prime> flag_primes = a.flags();
  const std::vector<Prime> scratch = [&] {
    auto v = flag_primes;
    v.insert(v.end(), {a.l2, a.h2, a.r2});
    return v;
  }();
  auto is_clean = [&] {
    for (Prime p : scratch) {
      if (runner.exponent(p) != 0) return false;
    }
    return true;
  };
  auto is_legal_now = [&] {
    Exponent flags = 0;
    for (Prime p : flag_primes) flags += runner.exponent(p);
    Exponent states = 0;
    for (Prime p : a.state_primes) states += runner.exponent(p);
    return flags <= 1 && states <= 1 && runner.exponent(a.h) <= 1 && runner.exponent(a.h2) <= 1;
  };

  tm::Configuration current = c;
  std::uint64_t tm_steps = 0;
  for (;;) {
    if (tm_steps == max_tm_steps) return Verified{tm_steps, runner.steps(), false};
    auto next = tm::tm_step(tm, current);
    std::optional<ExponentVector> target;
    if (next) target = encode_config(a, *next);
    // Advance to the next clean value, or to the halt.
    for (;;) {
      if (runner.steps() >= fuel) return Exhausted{tm_steps, runner.steps()};
      if (!runner.step()) {
        if (next) {
          return CounterExample{"Fractran run halted after " + std::to_string(runner.steps()) +
                                " steps while the machine takes step " + std::to_string(tm_steps + 1) + " to " +
                                tm::format_configuration(tm, *next)};
        }
        return Verified{tm_steps, runner.steps(), true};
      }
      if (!is_legal_now()) {
        return CounterExample{"illegal value " + runner.value().factored() + " after " +
                              std::to_string(runner.steps()) + " Fractran steps"};
      }
      if (next && is_clean()) {
        ExponentVector value = runner.value();
        if (value != *target) {
          return CounterExample{"after TM step " + std::to_string(tm_steps + 1) + " expected " +
                                target->factored() + " but reached " + value.factored()};
        }
        break;
      }
    }
    current = std::move(*next);
    ++tm_steps;
  }
}

}  // namespace fractran::compiler
