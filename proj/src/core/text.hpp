#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace swd {

// Locale-independent decimal formatting at 17 significant digits, enough to
// round-trip any double exactly.
std::string format_double(double value);

// Strict full-token parses; reject on trailing characters.
bool parse_double(std::string_view token, double& out);
bool parse_long(std::string_view token, long& out);

std::vector<std::string_view> split(std::string_view line, char sep);

std::string_view trim(std::string_view s);

} // namespace swd
