#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsynth::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kSynthesisFailure = 3,
  kVerificationFailure = 4,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncsynth::cli
