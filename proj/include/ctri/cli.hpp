#pragma once

#include "ctri/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ctri {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitInput = 3;

int exit_code_for(ErrorCode code);

// Runs one subcommand; output that is not written to --out goes to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctri
