#include "fractran/error.hpp"

namespace fractran {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyProgram: return "EmptyProgram";
    case ErrorCode::ZeroPart: return "ZeroPart";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NoStart: return "NoStart";
    case ErrorCode::DuplicateTransition: return "DuplicateTransition";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::UnknownDirection: return "UnknownDirection";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::SelfTransition: return "SelfTransition";
    case ErrorCode::FuelZero: return "FuelZero";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace fractran
