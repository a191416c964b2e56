#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fractran::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kUndecided = 3,
  kPrecondition = 4,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fractran::cli
