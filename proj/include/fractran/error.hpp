#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fractran {

enum class ErrorCode {
  EmptyProgram,
  ZeroPart,
  Malformed,
  ZeroInput,
  NoStart,
  DuplicateTransition,
  BadSymbol,
  UnknownDirection,
  UnknownState,
  SelfTransition,
  FuelZero,
  TooLarge,
  Overflow,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fractran
