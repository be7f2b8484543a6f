#include "rankpd/num_format.hpp"

#include <charconv>
#include <cstdio>

namespace rankpd {

std::string fmt_double(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_sig12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool parse_double(std::string_view token, double& out) {
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

bool parse_int(std::string_view token, int& out) {
  const auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

}  // namespace rankpd
