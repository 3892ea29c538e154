#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir1d::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kNotConverged = 3 };

/// Runs the command line `args` (without the program name).  Tables go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir1d::cli
