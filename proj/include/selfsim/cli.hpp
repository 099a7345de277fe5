#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfsim {

// Front end over the library: args as on a command line, program name
// excluded. Returns the exit code: 0 success, 1 verification failure,
// 2 invalid input, 3 precision exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfsim
