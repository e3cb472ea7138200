#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirichlet_roots::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line. args excludes the program name. JSON goes to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirichlet_roots::cli
