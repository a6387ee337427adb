#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specfactor::cli {

/// Runs one command line (without the program name). Exit codes: 0 success
/// with JSON on `out`, 1 domain error with error JSON on `err`, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specfactor::cli
