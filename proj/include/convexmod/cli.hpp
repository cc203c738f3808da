#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convexmod {

/// Runs the command line tool on `args` (without the program name).
/// Returns 0 on success, 1 when a check fails or two terms differ, and 2 on
/// usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexmod
