#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace floertori {

// Runs the command-line tool in-process (args excludes the program
// name) so tests can drive it without spawning. Returns the exit
// code: 0 success, 1 rejected input (syntax, schema, or hypothesis
// failure), 2 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floertori
