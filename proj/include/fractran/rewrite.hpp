#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fractran/stream_spec.hpp"
#include "fractran/term.hpp"

namespace fractran::lsf {

struct Produced {
  std::uint64_t steps;
  TermPtr result;  // root constructor: bullet, or a cons
};

struct Exhausted {
  TermPtr partial;
  std::uint64_t fuel;
};

using Evaluation = std::variant<Produced, Exhausted>;

inline bool produced(const Evaluation& e) { return std::holds_alternative<Produced>(e); }

/// Called whenever the whole term under evaluation is head(s), with the
/// number of rule applications so far.
using Observer = std::function<void(const Term& term, std::uint64_t steps)>;

/// Rewrites `term` until its root is a constructor (bullet or cons), always
/// contracting the outermost redex that blocks the root: the root constant
/// unfolds, mod and zip expand, and head/tail first force their argument to a
/// cons. Each rule application costs one unit of fuel. Throws FuelZero when
/// fuel is 0 and the term is not already a constructor.
///
/// With `batch_skips`, runs of mod/zip steps each followed by the tail step
/// that discards the new element are applied together; step counts and
/// results are the same as without.
Evaluation evaluate(const StreamSpec& spec, TermPtr term, std::uint64_t fuel, const Observer& observer = {},
                    bool batch_skips = true);

/// evaluate(head(tail^n(root))).
Evaluation rewrite_nth(const StreamSpec& spec, const BigInt& n, std::uint64_t fuel, const Observer& observer = {});

struct ProbeEntry {
  std::uint64_t index;
  bool produced;
  std::uint64_t steps;  // rule applications; equals fuel when exhausted
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;  // by index
  /// Largest N such that every index below N produced.
  std::uint64_t productive_up_to;

  bool all_produced() const { return productive_up_to == entries.size(); }
};

/// rewrite_nth for n = 0..count-1, spread over `workers` threads (0 picks
/// the hardware concurrency). Entries come back ordered by index.
ProbeReport probe_productivity(const StreamSpec& spec, std::uint64_t count, std::uint64_t fuel,
                               unsigned workers = 0);

/// One line per index ("n: produced steps=k" / "n: exhausted fuel=F") and a
/// closing "summary: ..." line.
std::string format_report(const ProbeReport& report, std::uint64_t fuel);

}  // namespace fractran::lsf
