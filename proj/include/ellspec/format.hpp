#pragma once

#include <cstdio>
#include <string>

namespace ellspec {

// All numeric text output goes through these, so files are byte-stable for a
// given build and doubles survive a write/parse round trip.

/// Shortest %.17g rendering; round-trip safe for IEEE doubles.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_index(unsigned long long v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llu", v);
  return buf;
}

}  // namespace ellspec
