#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbreak::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Human output goes to
/// `out`; on failure a single-line JSON object {"error", "message", "exit"}
/// is written to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Inserts `--key value` for every key of the JSON object in the file named
/// by `--config`, unless `--key` is already present. The `--config` pair
/// itself is removed.
[[nodiscard]] std::vector<std::string> merge_config(const std::vector<std::string>& args);

}  // namespace arbreak::cli
