#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `nsg <args...>` (args exclude the program name) and returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsg::cli
