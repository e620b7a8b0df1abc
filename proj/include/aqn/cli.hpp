#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aqn {

// Parses and dispatches a command line (argv without the program name).
// Returns the process exit code: 0 all checks pass / value computed,
// 1 violation or expectation mismatch, 2 usage or capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aqn
