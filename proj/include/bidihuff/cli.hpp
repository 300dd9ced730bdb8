#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bidihuff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line tool. `args` excludes the program name. Reports go to
// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bidihuff::cli
