#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wallchamber {

namespace exit_code {
constexpr int ok = 0;
constexpr int parse = 2;
constexpr int precondition = 3;
constexpr int internal = 4;
} // namespace exit_code

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wallchamber
