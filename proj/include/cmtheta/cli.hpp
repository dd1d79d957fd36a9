#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmtheta::cli {

// Parses and runs one command-line invocation (without the program
// name). Returns the process exit code: 0 on success, 1 on a domain
// precondition violation, 2 on a parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmtheta::cli
