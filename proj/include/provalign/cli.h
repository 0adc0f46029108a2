#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace provalign::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFindings = 1;
inline constexpr int kUsageOrLoad = 2;

// Runs one invocation. `args` excludes the program name. Reports go to
// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace provalign::cli
