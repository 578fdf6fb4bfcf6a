// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace mco {

// Shortest round-trip decimal text for a double. Locale independent, '.'
// decimal point, identical output for identical bit patterns. Every number
// that lands in a CSV or trace file goes through here.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string format_i64(std::int64_t v) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string format_u64(std::uint64_t v) {
  char buf[24];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace mco
