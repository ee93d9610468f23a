#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scottrep::cli {

// Exit codes: 0 all laws pass, 1 usage or parse error, 2 fuel exhaustion or
// Unknown rate over the threshold, 3 a law failed.
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitFail = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scottrep::cli
