#pragma once

#include <string>
#include <vector>

namespace steintile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

struct RunResult {
  std::string subcommand;
  int exit_code = kExitOk;
  /// Everything meant for stdout: one JSON document, a table or CSV.
  std::string output;
  /// Diagnostics for stderr.
  std::string error;
};

/// argv[0] is the program name. Never throws.
RunResult run(const std::vector<std::string>& argv);

}  // namespace steintile::cli
