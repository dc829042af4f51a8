#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpx::cli {

// Exit codes. Solve maps its status onto 0/2/3; certify uses 2 for a refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitIterationLimit = 2;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitSingularBasis = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vpx::cli
