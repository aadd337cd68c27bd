#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parthom::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kInvalidInput = 2 };

/// Runs the command line in `args` (without the program name), writing the
/// artifact to `out` (or --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parthom::cli
