#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigforge {

// Exit codes: 0 success, 2 parse or precondition error, 3 verification
// failure (including a rejected parity or metabolizer check).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace sigforge
