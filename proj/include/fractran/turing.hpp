#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractran/bigint.hpp"
#include "fractran/interpreter.hpp"

namespace fractran::tm {

enum class Move : std::uint8_t { Left, Right };

using StateId = std::size_t;

struct Transition {
  StateId next;
  std::uint8_t write;  // 0 or 1
  Move move;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Two-symbol Turing machine; blank is 0. States are kept in declaration
/// order, which downstream fixes the prime assigned to each state.
class UnaryTM {
 public:
  UnaryTM(std::vector<std::string> states, StateId start);

  const std::vector<std::string>& states() const { return states_; }
  StateId start() const { return start_; }
  std::size_t state_count() const { return states_.size(); }
  const std::string& name(StateId q) const { return states_.at(q); }
  std::optional<StateId> find(std::string_view name) const;

  const std::optional<Transition>& delta(StateId q, std::uint8_t symbol) const;

  /// Throws DuplicateTransition if (q, symbol) is already defined.
  void define(StateId q, std::uint8_t symbol, Transition t);

  bool has_self_transition() const;

  friend bool operator==(const UnaryTM&, const UnaryTM&) = default;

 private:
  std::vector<std::string> states_;
  StateId start_;
  std::vector<std::optional<Transition>> delta_;  // index 2*q + symbol
};

/// Tape halves are stored as the binary numbers the Fractran encoding uses:
/// bit i of `left` is cell -1-i and bit i of `right` is cell 1+i.
struct Configuration {
  StateId state = 0;
  BigInt left;
  std::uint8_t head = 0;
  BigInt right;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Format:
///   start <state>
///   states <s1> <s2> ...            (optional; fixes state order)
///   <state> <0|1> -> <state> <0|1> <L|R>
/// A token starting with '#' comments out the rest of the line.
UnaryTM parse_tm(std::string_view text);
std::string to_text(const UnaryTM& tm);

std::optional<Configuration> tm_step(const UnaryTM& tm, const Configuration& c);

struct TmTrace {
  std::vector<Configuration> configs;
  Outcome outcome;
};

TmTrace tm_run(const UnaryTM& tm, const Configuration& c, std::uint64_t fuel);

/// Returns `tm` unchanged when no transition loops on its own state;
/// otherwise the shadow-state construction over states Q + Q_#, where every
/// transition from q goes to the shadow of its target and every transition
/// from a shadow goes to the plain target.
UnaryTM normalize_no_self_loops(const UnaryTM& tm);

/// Name given to the shadow copy of `state`.
std::string shadow_name(std::string_view state);

/// "<leftbits> <state> <head><rightbits>", e.g. "1 b 1001". Left bits read
/// as an ordinary binary number (last digit is the cell next to the head);
/// right bits are written outward from the head, so they read as the
/// binary number reversed.
Configuration parse_configuration(const UnaryTM& tm, std::string_view text);
std::string format_configuration(const UnaryTM& tm, const Configuration& c);

}  // namespace fractran::tm
