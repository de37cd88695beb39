#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liscount {

// Runs the command-line front end on the given arguments (program name not
// included). Exit code: 0 success, 1 usage/runtime error, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liscount
