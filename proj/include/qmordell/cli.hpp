// Command-line front end. run() is the whole program minus main(): it parses
// argv-style arguments, dispatches to the library, and writes the rendered
// result to `out` (or to --output). Exit codes are a stable contract:
//   0  success
//   2  usage error (unknown command/series/id, bad flag combination, bad p)
//   3  mathematical verification failure (identity mismatch or residual)
//   1  anything else (I/O errors, internal faults)
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmordell::cli {

// args are the command-line arguments *without* the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmordell::cli
