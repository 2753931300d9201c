#pragma once

#include <cstdint>
#include <string>

namespace wordstat {

// Unsigned 128-bit counter used for all functional values. Sigma grows like
// n^3/3 and leaves the 64-bit range near n = 3e6; power scores reach n^3 as
// well, so 64 bits would silently corrupt every normalized ratio.
using BigCount = unsigned __int128;

inline std::string to_string(BigCount v) {
  if (v == 0) return "0";
  char buf[48];
  int pos = 48;
  while (v > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 48);
}

inline double to_double(BigCount v) { return static_cast<double>(v); }

inline bool fits_uint64(BigCount v) { return v <= static_cast<BigCount>(UINT64_MAX); }

} // namespace wordstat
