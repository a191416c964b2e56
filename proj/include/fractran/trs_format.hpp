#pragma once

#include <string>

#include "fractran/stream_spec.hpp"

namespace fractran::lsf {

/// Old TPDB syntax:
///   (VAR x s s1 ... sd)
///   (RULES
///   <lhs> -> <rhs>
///   ...
///   )
/// Rules come in StreamSpec::rules() order. Throws TooLarge for specs whose
/// rules are too big to spell out.
std::string emit_trs(const StreamSpec& spec);

}  // namespace fractran::lsf
