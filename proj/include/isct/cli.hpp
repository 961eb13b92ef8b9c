#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isct {

// Parses and executes one command-line invocation (argv without the program
// name). Reports go to `out`, diagnostics to `err`.
//
// Exit codes: 0 all computations and checks pass; 1 a mathematical check
// failed; 2 input error; 3 resource guard tripped.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isct
