#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fock::cli {

// Runs the command line given by args (without the program name).
// Returns the process exit code: 0 success, 1 domain or internal failure,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fock::cli
