#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sensorplace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sensorplace::cli
