#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace r2m {

// Exit codes of the command-line frontend.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;  // crosscheck found a mismatch
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

// Runs one invocation; args excludes the program name. JSON goes to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace r2m
