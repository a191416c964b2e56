#include "fractran/trs_format.hpp"

namespace fractran::lsf {

std::string emit_trs(const StreamSpec& spec) {
  auto rules = spec.rules();
  std::string out = "(VAR x s";
  for (BigInt i = 1; i <= spec.zip_arity(); ++i) out += " s" + to_string(i);
  out += ")\n(RULES\n";
  for (const auto& r : rules) out += to_tpdb(*r.lhs) + " -> " + to_tpdb(*r.rhs) + "\n";
  out += ")\n";
  return out;
}

}  // namespace fractran::lsf
