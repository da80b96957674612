#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbbw {

// Parses and runs the qbbw command line (arguments without the program
// name). Exit code 0 on success (a vanishing cohomology group is a
// successful answer), 1 on usage errors, 2 on verification failures.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace qbbw
