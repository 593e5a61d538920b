#pragma once

// Command-line front end. run() is the whole program minus process exit,
// so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace padic_ell::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Parses args (without the program name), runs the command, writes the
/// result to out (or the --out file) and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic_ell::cli
