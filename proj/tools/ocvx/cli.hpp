#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace ocvx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitTimeout = 3;

inline constexpr int kReportSchemaVersion = 1;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace ocvx::cli
