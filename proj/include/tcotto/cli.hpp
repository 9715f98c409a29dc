#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcotto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation; `args` excludes the program name. Results go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tcotto::cli
