#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nearcentral::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kUsage = 2,
    kRefused = 3,
};

/// Runs the command line (without the program name). Results go to out, or
/// to the --output file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearcentral::cli
