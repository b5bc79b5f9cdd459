#pragma once

#include <iosfwd>

namespace skeinforge::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2, // bad arguments or unparsable word
  kBoundExceeded = 3,
  kPrecondition = 4,
};

/// Runs the `skeinforge` command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace skeinforge::cli
