#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xx0::cli {

/// Runs the command line tool; returns the process exit code
/// (0 ok, 2 validation error, 3 identity mismatch, 1 other failure).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace xx0::cli
