#pragma once

#include <string>
#include <vector>

namespace qschubert::cli {

inline constexpr const char* kSchemaVersion = "qschubert/1";

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;          // bad flag, malformed partition, unknown suite
inline constexpr int kExitBox = 3;            // partition outside the l x k box
inline constexpr int kExitNMismatch = 4;      // l + k != n
inline constexpr int kExitCounterexample = 5;

struct Result {
  int exit_code = kExitOk;
  std::string out;  // the single output document
  std::string err;  // diagnostics
};

/// Runs the command line `args` (args[0] is the program name) and captures
/// its output instead of writing to the terminal.
[[nodiscard]] Result run(const std::vector<std::string>& args);

}  // namespace qschubert::cli
