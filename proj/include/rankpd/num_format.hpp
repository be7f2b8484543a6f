#pragma once

#include <string>
#include <string_view>

namespace rankpd {

/// Shortest decimal form that round-trips (std::to_chars default).
std::string fmt_double(double v);

/// Fixed 12-significant-digit form used in report columns.
std::string fmt_sig12(double v);

bool parse_double(std::string_view token, double& out);
bool parse_int(std::string_view token, int& out);

}  // namespace rankpd
