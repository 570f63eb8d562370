#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpk/errors.hpp"

namespace gpk {

/// One machine-readable report line: space-separated key=value pairs, values
/// double-quoted when they contain spaces, quotes or are empty.
using Record = std::vector<std::pair<std::string, std::string>>;

std::string format_record(const Record& record);
/// Inverse of format_record. Throws Error(invalid_argument) on malformed input.
Record parse_record(std::string_view line);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int config = 3;
inline constexpr int invalid_input = 4;
inline constexpr int validation = 5;
inline constexpr int precondition = 6;
inline constexpr int unsupported = 7;
inline constexpr int non_injective = 8;
inline constexpr int budget = 9;
inline constexpr int context_mismatch = 10;
inline constexpr int overflow = 11;
inline constexpr int internal = 12;
}  // namespace exit_code

int exit_code_for(ErrorCode code) noexcept;

/// Full command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`; returns the process exit status.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gpk
