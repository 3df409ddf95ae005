#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurkit::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,  // a verify suite found a mismatch
  kUsage = 2,
};

/// Runs one invocation. args excludes the program name. JSON and results go to
/// out, diagnostics to err. Output depends only on args, the seed flag and
/// SCHURKIT_THREADS never changes it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurkit::cli
