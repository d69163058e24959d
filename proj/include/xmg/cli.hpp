#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xmg {

// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). The JSON report goes to
// `out` (or to --out), a one-line status to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xmg
