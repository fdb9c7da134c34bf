#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// A certificate hypothesis or a requested check failed.
  kExitHypothesisFailed = 1,
  /// Unparseable or schema-violating input, bad flags.
  kExitMalformed = 2,
  /// An internal consistency check fired.
  kExitInternal = 3,
};

/// Runs one invocation. args excludes the program name. Input is read from
/// --input or from in; reports go to --output or out; diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace torelli
