#pragma once

#include <iosfwd>

namespace dimerknot {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitUnsupported = 2, kExitCap = 3, kExitMismatch = 4 };

/// Parses argv and runs one command, writing results to out and diagnostics
/// to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimerknot
