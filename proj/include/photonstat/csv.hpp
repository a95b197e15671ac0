#pragma once

#include <string>
#include <vector>

namespace photonstat {

// Shortest decimal form that round-trips the exact double. Always '.' as
// the separator, never locale-dependent; every CSV writer in the tool goes
// through here so outputs are byte-stable.
std::string format_double(double value);

// Fixed-point with exactly one decimal digit, for percent tables.
std::string format_fixed1(double value);

std::vector<std::string> split_csv_line(const std::string& line);
std::string join_csv(const std::vector<std::string>& fields);

}  // namespace photonstat
