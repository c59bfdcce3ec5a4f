#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf {

/// Runs one hopfctl command (args without the program name). Returns the exit code:
/// 0 success, 1 verification failure, 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
