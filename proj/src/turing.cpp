#include "fractran/turing.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fractran/error.hpp"

namespace fractran::tm {

UnaryTM::UnaryTM(std::vector<std::string> states, StateId start)
    : states_(std::move(states)), start_(start), delta_(2 * states_.size()) {
  if (states_.empty()) throw Error(ErrorCode::NoStart, "machine has no states");
  if (start_ >= states_.size()) throw Error(ErrorCode::UnknownState, "start state out of range");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (states_[i] == states_[j]) throw Error(ErrorCode::Malformed, "state '" + states_[i] + "' declared twice");
    }
  }
}

std::optional<StateId> UnaryTM::find(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

const std::optional<Transition>& UnaryTM::delta(StateId q, std::uint8_t symbol) const {
  return delta_.at(2 * q + symbol);
}

void UnaryTM::define(StateId q, std::uint8_t symbol, Transition t) {
  if (symbol > 1 || t.write > 1) throw Error(ErrorCode::BadSymbol, "symbols are 0 and 1");
  if (t.next >= states_.size() || q >= states_.size()) throw Error(ErrorCode::UnknownState, "state out of range");
  auto& slot = delta_.at(2 * q + symbol);
  if (slot) {
    throw Error(ErrorCode::DuplicateTransition,
                "(" + states_[q] + ", " + std::to_string(symbol) + ") defined twice");
  }
  slot = t;
}

bool UnaryTM::has_self_transition() const {
  for (StateId q = 0; q < states_.size(); ++q) {
    for (std::uint8_t s = 0; s < 2; ++s) {
      if (const auto& t = delta(q, s); t && t->next == q) return true;
    }
  }
  return false;
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') break;
    out.push_back(tok);
  }
  return out;
}

std::uint8_t parse_symbol(const std::string& tok) {
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  throw Error(ErrorCode::BadSymbol, "expected 0 or 1, got '" + tok + "'");
}

Move parse_move(const std::string& tok) {
  if (tok == "L") return Move::Left;
  if (tok == "R") return Move::Right;
  throw Error(ErrorCode::UnknownDirection, "expected L or R, got '" + tok + "'");
}

struct RawTransition {
  std::string from;
  std::uint8_t read;
  std::string to;
  std::uint8_t write;
  Move move;
};

}  // namespace

UnaryTM parse_tm(std::string_view text) {
  std::optional<std::string> start;
  std::optional<std::vector<std::string>> declared;
  std::vector<RawTransition> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    auto where = " (line " + std::to_string(line_no) + ")";
    if (toks[0] == "start") {
      if (toks.size() != 2 || start) throw Error(ErrorCode::Malformed, "bad start line" + where);
      start = toks[1];
    } else if (toks[0] == "states") {
      if (declared) throw Error(ErrorCode::Malformed, "states declared twice" + where);
      declared.emplace(toks.begin() + 1, toks.end());
    } else {
      if (toks.size() != 6 || toks[2] != "->") {
        throw Error(ErrorCode::Malformed, "expected '<q> <s> -> <q'> <s'> <L|R>'" + where);
      }
      raw.push_back({toks[0], parse_symbol(toks[1]), toks[3], parse_symbol(toks[4]), parse_move(toks[5])});
    }
  }
  if (!start) throw Error(ErrorCode::NoStart, "missing 'start <state>' line");

  std::vector<std::string> states;
  if (declared) {
    states = *declared;
  } else {
    auto note = [&](const std::string& s) {
      if (std::find(states.begin(), states.end(), s) == states.end()) states.push_back(s);
    };
    note(*start);
    for (const auto& t : raw) {
      note(t.from);
      note(t.to);
    }
  }

  auto index_of = [&](const std::string& s) -> StateId {
    auto it = std::find(states.begin(), states.end(), s);
    if (it == states.end()) throw Error(ErrorCode::UnknownState, "state '" + s + "' is not declared");
    return static_cast<StateId>(it - states.begin());
  };

  UnaryTM tm(states, index_of(*start));
  for (const auto& t : raw) {
    tm.define(index_of(t.from), t.read, Transition{index_of(t.to), t.write, t.move});
  }
  return tm;
}

std::string to_text(const UnaryTM& tm) {
  std::string out = "start " + tm.name(tm.start()) + "\nstates";
  for (const auto& s : tm.states()) out += " " + s;
  out += "\n";
  for (StateId q = 0; q < tm.state_count(); ++q) {
    for (std::uint8_t s = 0; s < 2; ++s) {
      const auto& t = tm.delta(q, s);
      if (!t) continue;
      out += tm.name(q) + " " + std::to_string(s) + " -> " + tm.name(t->next) + " " + std::to_string(t->write) +
             (t->move == Move::Left ? " L\n" : " R\n");
    }
  }
  return out;
}

std::optional<Configuration> tm_step(const UnaryTM& tm, const Configuration& c) {
  const auto& t = tm.delta(c.state, c.head);
  if (!t) return std::nullopt;
  Configuration next;
  next.state = t->next;
  // The written symbol joins the half the head moves away from.
  if (t->move == Move::Left) {
    next.head = mpz_odd_p(c.left.get_mpz_t()) ? 1 : 0;
    next.left = c.left >> 1;
    next.right = 2 * c.right + t->write;
  } else {
    next.head = mpz_odd_p(c.right.get_mpz_t()) ? 1 : 0;
    next.right = c.right >> 1;
    next.left = 2 * c.left + t->write;
  }
  return next;
}

TmTrace tm_run(const UnaryTM& tm, const Configuration& c, std::uint64_t fuel) {
  TmTrace trace{{c}, FuelExhausted{fuel}};
  for (std::uint64_t k = 0;; ++k) {
    auto next = tm_step(tm, trace.configs.back());
    if (!next) {
      trace.outcome = Halted{k};
      return trace;
    }
    if (k == fuel) return trace;
    trace.configs.push_back(std::move(*next));
  }
}

std::string shadow_name(std::string_view state) { return std::string(state) + "_#"; }

UnaryTM normalize_no_self_loops(const UnaryTM& tm) {
  if (!tm.has_self_transition()) return tm;

  const std::size_t n = tm.state_count();
  std::vector<std::string> states = tm.states();
  for (StateId q = 0; q < n; ++q) {
    std::string name = shadow_name(tm.name(q));
    while (std::find(states.begin(), states.end(), name) != states.end()) name += "#";
    states.push_back(std::move(name));
  }
  UnaryTM out(std::move(states), tm.start());
  for (StateId q = 0; q < n; ++q) {
    for (std::uint8_t s = 0; s < 2; ++s) {
      const auto& t = tm.delta(q, s);
      if (!t) continue;
      out.define(q, s, Transition{t->next + n, t->write, t->move});
      out.define(q + n, s, Transition{t->next, t->write, t->move});
    }
  }
  return out;
}

Configuration parse_configuration(const UnaryTM& tm, std::string_view text) {
  auto toks = tokens_of(text);
  if (toks.size() != 3) throw Error(ErrorCode::Malformed, "configuration needs '<left> <state> <head><right>'");
  auto state = tm.find(toks[1]);
  if (!state) throw Error(ErrorCode::UnknownState, "unknown state '" + toks[1] + "'");
  auto bits_ok = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
  };
  if (!bits_ok(toks[0]) || !bits_ok(toks[2])) throw Error(ErrorCode::BadSymbol, "tape cells are 0 or 1");

  Configuration c;
  c.state = *state;
  c.left.set_str(toks[0], 2);
  c.head = toks[2][0] == '1' ? 1 : 0;
  std::string right(toks[2].rbegin(), toks[2].rend() - 1);
  c.right = right.empty() ? BigInt(0) : BigInt(right, 2);
  return c;
}

std::string format_configuration(const UnaryTM& tm, const Configuration& c) {
  std::string right = c.right == 0 ? "" : c.right.get_str(2);
  std::reverse(right.begin(), right.end());
  return c.left.get_str(2) + " " + tm.name(c.state) + " " + std::to_string(c.head) + right;
}

}  // namespace fractran::tm
