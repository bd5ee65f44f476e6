#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raag::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNoWitness = 2,
  kHypothesisFailure = 3,
  kVerificationFailed = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
