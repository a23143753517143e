#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liehopf::cli {

/// Runs the command line; returns the exit code (0 pass, 1 verification
/// failure, 2 usage or parse error). Diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace liehopf::cli
