#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "fractran/exponent_vector.hpp"
#include "fractran/program.hpp"
#include "fractran/turing.hpp"

namespace fractran::compiler {

/// Primes standing for the registers and flags of the compiled machine.
/// Primed names (l2, h2, r2) are the temporary tape l', h', r'.
struct PrimeAllocation {
  Prime l, h, r, l2, h2, r2;
  Prime move_left[2];
  Prime move_right[2];
  Prime copy[2];
  std::vector<Prime> state_primes;  // indexed by tm::StateId

  /// The six move/copy flags in allocation order.
  std::vector<Prime> flags() const;

  friend bool operator==(const PrimeAllocation&, const PrimeAllocation&) = default;
};

enum class Family { Illegal, MoveLeft, MoveRight, Copy, TransHead, Term, TransBlank };

std::string_view family_name(Family f);

struct CompiledProgram {
  FractranProgram program;
  PrimeAllocation allocation;
  std::vector<Family> families;  // one per fraction
};

/// 2, 3, 5, 7, 11, 13 for the tape, then the six flags, then one prime per
/// state in the machine's state order.
PrimeAllocation allocate_primes(const tm::UnaryTM& tm);

/// Throws SelfTransition when some transition stays in its own state.
CompiledProgram compile(const tm::UnaryTM& tm);

/// l^L * p_state * h^H * r^R.
ExponentVector encode_config(const PrimeAllocation& a, const tm::Configuration& c);

/// Program text with a comment header naming every prime, one fraction per
/// line tagged with its family. Parses back with parse_program.
std::string format_listing(const tm::UnaryTM& tm, const CompiledProgram& compiled);

/// At most one flag prime, at most one state prime, and h, h' each at most 1.
bool is_legal(const PrimeAllocation& a, const ExponentVector& n);

struct Verified {
  std::uint64_t tm_steps;
  std::uint64_t fractran_steps;
  bool halted;
};

struct CounterExample {
  std::string details;
};

struct Exhausted {
  std::uint64_t tm_steps;
  std::uint64_t fractran_steps;
};

using SimulationVerdict = std::variant<Verified, CounterExample, Exhausted>;

/// Runs the machine from c alongside the compiled program from n_c. Every TM
/// successor must be the next value of the Fractran run free of flags and
/// temporary tape; a TM normal form must make the Fractran run halt. Every
/// value on the way must satisfy is_legal. `fuel` bounds Fractran steps;
/// after `max_tm_steps` checked TM steps the verdict is Verified with
/// halted = false.
SimulationVerdict check_simulation(const tm::UnaryTM& tm, const tm::Configuration& c, std::uint64_t fuel,
                                   std::uint64_t max_tm_steps = std::numeric_limits<std::uint64_t>::max());

}  // namespace fractran::compiler
