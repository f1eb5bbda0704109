#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z4cb::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalid = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4cb::cli
