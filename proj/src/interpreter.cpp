#include "fractran/interpreter.hpp"

#include <algorithm>

#include "fractran/error.hpp"

namespace fractran {

std::optional<BigInt> step(const FractranProgram& program, const BigInt& n) {
  if (sgn(n) <= 0) throw Error(ErrorCode::ZeroInput, "Fractran values are positive");
  BigInt product;
  for (const auto& f : program.fractions()) {
    product = n * f.num;
    if (mpz_divisible_p(product.get_mpz_t(), f.den.get_mpz_t())) {
      mpz_divexact(product.get_mpz_t(), product.get_mpz_t(), f.den.get_mpz_t());
      return product;
    }
  }
  return std::nullopt;
}

std::optional<ExponentVector> step(const FractranProgram& program, const ExponentVector& n) {
  for (std::size_t i = 0; i < program.size(); ++i) {
    ExponentVector scaled = n * program.numerator_factors(i);
    const auto& den = program.denominator_factors(i);
    if (den.divides(scaled)) return scaled.divided_by(den);
  }
  return std::nullopt;
}

Runner::Runner(const FractranProgram& program, const ExponentVector& start) {
  for (std::size_t i = 0; i < program.size(); ++i) {
    for (const auto& [p, e] : program.numerator_factors(i).entries()) basis_.push_back(p);
    for (const auto& [p, e] : program.denominator_factors(i).entries()) basis_.push_back(p);
  }
  std::sort(basis_.begin(), basis_.end());
  basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
  auto slot = [&](Prime p) {
    return static_cast<std::size_t>(std::lower_bound(basis_.begin(), basis_.end(), p) - basis_.begin());
  };

  exponents_.assign(basis_.size(), 0);
  for (const auto& [p, e] : start.entries()) {
    if (std::binary_search(basis_.begin(), basis_.end(), p)) {
      exponents_[slot(p)] = e;
    } else {
      rest_.set(p, e);
    }
  }

  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto& num = program.numerator_factors(i);
    const auto& den = program.denominator_factors(i);
    Rule rule;
    for (Prime p : basis_) {
      Exponent up = num.exponent(p);
      Exponent down = den.exponent(p);
      if (down > up) rule.need.push_back({slot(p), down - up});
      if (up > down) rule.give.push_back({slot(p), up - down});
    }
    rules_.push_back(std::move(rule));
  }
}

std::optional<std::size_t> Runner::step() {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& rule = rules_[i];
    bool applies = std::all_of(rule.need.begin(), rule.need.end(),
                               [&](const Delta& t) { return exponents_[t.slot] >= t.amount; });
    if (!applies) continue;
    for (const Delta& t : rule.need) exponents_[t.slot] -= t.amount;
    for (const Delta& t : rule.give) {
      if (exponents_[t.slot] > std::numeric_limits<Exponent>::max() - t.amount) {
        throw Error(ErrorCode::Overflow, "exponent exceeds 64 bits");
      }
      exponents_[t.slot] += t.amount;
    }
    ++steps_;
    return i;
  }
  return std::nullopt;
}

ExponentVector Runner::value() const {
  std::vector<ExponentVector::Entry> entries(rest_.entries().begin(), rest_.entries().end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (exponents_[i] != 0) entries.emplace_back(basis_[i], exponents_[i]);
  }
  // Basis and rest are disjoint prime sets, so sorting is all that is needed.
  std::sort(entries.begin(), entries.end());
  return ExponentVector::from_sorted(std::move(entries));
}

std::optional<Exponent> Runner::power_of(Prime p) const {
  Exponent e = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (basis_[i] != p) return std::nullopt;
    e = exponents_[i];
  }
  for (const auto& [q, f] : rest_.entries()) {
    if (q != p) return std::nullopt;
    e = f;
  }
  return e;
}

Exponent Runner::exponent(Prime p) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p);
  if (it != basis_.end() && *it == p) return exponents_[it - basis_.begin()];
  return rest_.exponent(p);
}

Trace run(const FractranProgram& program, const ExponentVector& n0, std::uint64_t fuel) {
  Runner runner(program, n0);
  Trace trace{{n0}, {}, FuelExhausted{fuel}};
  while (runner.steps() < fuel) {
    auto rule = runner.step();
    if (!rule) {
      trace.outcome = Halted{runner.steps()};
      return trace;
    }
    trace.rules.push_back(*rule);
    trace.values.push_back(runner.value());
  }
  // Fuel is spent, but a value with no applicable fraction still counts as halted.
  if (!fractran::step(program, trace.values.back())) trace.outcome = Halted{runner.steps()};
  return trace;
}

Trace run(const FractranProgram& program, const BigInt& n0, std::uint64_t fuel) {
  return run(program, factorize(n0), fuel);
}

Outcome halts(const FractranProgram& program, const ExponentVector& n0, std::uint64_t fuel) {
  Runner runner(program, n0);
  while (runner.steps() < fuel) {
    if (!runner.step()) return Halted{runner.steps()};
  }
  if (!fractran::step(program, runner.value())) return Halted{runner.steps()};
  return FuelExhausted{fuel};
}

Outcome halts(const FractranProgram& program, const BigInt& n0, std::uint64_t fuel) {
  return halts(program, factorize(n0), fuel);
}

std::vector<Exponent> powers_of_two_exponents(const FractranProgram& program, const BigInt& n0,
                                              std::uint64_t limit, std::size_t max_hits) {
  std::vector<Exponent> hits;
  Runner runner(program, factorize(n0));
  while (hits.size() < max_hits && runner.steps() < limit) {
    if (!runner.step()) break;
    if (auto e = runner.power_of(2)) hits.push_back(*e);
  }
  return hits;
}

}  // namespace fractran
