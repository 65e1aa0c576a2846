#pragma once

// Command-line front end.  Exit status: 0 when a verdict or result was
// printed, 1 for a negative verdict under --exit-status, 2 for bad input.

#include <ostream>
#include <string>
#include <vector>

namespace hnnfree {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hnnfree
