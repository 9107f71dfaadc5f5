#pragma once

#include <ostream>
#include <span>
#include <string>

namespace breadthlab::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace breadthlab::cli
