#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfub::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Runs the hfub command line. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 if a verification check failed, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfub::cli
