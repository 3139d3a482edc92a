#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqd::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kHypothesis = 3,
  kResource = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqd::cli
