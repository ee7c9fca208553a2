#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kshg::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 1,
    exit_capacity = 2,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace kshg::cli
