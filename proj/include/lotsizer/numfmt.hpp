#ifndef LOTSIZER_NUMFMT_HPP_
#define LOTSIZER_NUMFMT_HPP_

#include <charconv>
#include <cstdio>
#include <string>

namespace lotsizer {

// Shortest decimal form that round-trips the exact double. Deterministic
// across platforms, which keeps exported files byte-stable.
inline std::string format_number(double v) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

// Fixed-point with the given number of decimals (half away from zero, as
// printf rounds ties to even only in rare binary-exact cases; fine for
// currency display).
inline std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace lotsizer

#endif  // LOTSIZER_NUMFMT_HPP_
