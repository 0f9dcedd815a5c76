#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxorder {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the command line (arguments without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// --threads fallback: MAXORDER_THREADS, else the hardware concurrency.
unsigned default_thread_count();

}  // namespace maxorder
