#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fermat::cli {

inline constexpr int kExitPrime = 0;
inline constexpr int kExitComposite = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Records go to `out`,
/// diagnostics to `err`. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fermat::cli
