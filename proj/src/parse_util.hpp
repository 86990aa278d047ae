#ifndef SPACK_PARSE_UTIL_HPP
#define SPACK_PARSE_UTIL_HPP

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spack::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace spack::detail

#endif  // SPACK_PARSE_UTIL_HPP
