#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lamop::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 on success, 1 when a verification check fails, 2 on malformed
/// input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamop::cli
