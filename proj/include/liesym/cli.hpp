#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liesym::cli {

// Exit codes: 0 success / all checks hold, 1 a checked claim fails
// computationally (witness printed), 2 usage error, 3 resource guard.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

// Full CLI entry point, stream-parameterized so tests can drive it in
// process. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liesym::cli
