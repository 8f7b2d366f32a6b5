#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace largeness::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNoCertificate = 2 };

/// Runs the command line `args` (args[0] is the program name), writing
/// reports to `out` and diagnostics to `err`. Files are processed
/// concurrently; reports appear in input order.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace largeness::cli
