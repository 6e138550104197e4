#ifndef DORLING_FORMAT_HPP
#define DORLING_FORMAT_HPP

#include <charconv>
#include <string>

namespace dorling {

// Locale-independent shortest round-trip formatting, so that identical runs
// produce byte-identical output files.
inline std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace dorling

#endif
