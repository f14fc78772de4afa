#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rfun::cli {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal that parses back to exactly `value`.
std::string format_roundtrip(double value);
/// `digits` significant digits, locale independent.
std::string format_significant(double value, int digits = 15);

/// Parses "a" or "a..b" (inclusive).
std::vector<int> parse_m_range(const std::string& text);

}  // namespace rfun::cli
