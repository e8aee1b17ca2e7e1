#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grpcalc::cli {

enum ExitCode : int { ok = 0, input_error = 1, cap_exceeded = 2, invariant_failed = 3 };

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or --output FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grpcalc::cli
