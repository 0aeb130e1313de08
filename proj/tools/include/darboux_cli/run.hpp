#pragma once

#include <string>
#include <vector>

#include "darboux_cli/config.hpp"
#include "darboux_cli/output_table.hpp"

namespace darboux::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct RunResult {
  std::vector<OutputTable> tables;
  /// Human-readable check report (`verify` only).
  std::string report;
  int exit_code = kExitSuccess;
};

/// Library errors propagate as darboux::Error.
RunResult run(const RunConfig& config);

std::string tool_version();

}  // namespace darboux::cli
