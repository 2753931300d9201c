#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace wordstat {

// z[i] = length of the longest common prefix of s and s[i..); z[0] = |s|.
// Writes into the provided buffer to allow reuse across calls.
inline void z_into(std::span<const std::uint8_t> s, std::vector<std::int32_t>& z) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  z.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return;
  z[0] = static_cast<std::int32_t>(n);
  std::int64_t l = 0, r = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    std::int32_t zi = 0;
    if (i < r)
      zi = static_cast<std::int32_t>(std::min<std::int64_t>(r - i, z[static_cast<std::size_t>(i - l)]));
    while (i + zi < n && s[static_cast<std::size_t>(zi)] == s[static_cast<std::size_t>(i + zi)]) ++zi;
    z[static_cast<std::size_t>(i)] = zi;
    if (i + zi > r) {
      l = i;
      r = i + zi;
    }
  }
}

// Z-array of reverse(s), computed by index reflection without materializing
// the reversed buffer.
inline void z_into_reversed(std::span<const std::uint8_t> s, std::vector<std::int32_t>& z) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  auto at = [&](std::int64_t i) { return s[static_cast<std::size_t>(n - 1 - i)]; };
  z.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return;
  z[0] = static_cast<std::int32_t>(n);
  std::int64_t l = 0, r = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    std::int32_t zi = 0;
    if (i < r)
      zi = static_cast<std::int32_t>(std::min<std::int64_t>(r - i, z[static_cast<std::size_t>(i - l)]));
    while (i + zi < n && at(zi) == at(i + zi)) ++zi;
    z[static_cast<std::size_t>(i)] = zi;
    if (i + zi > r) {
      l = i;
      r = i + zi;
    }
  }
}

inline std::vector<std::int32_t> z_function(std::span<const std::uint8_t> s) {
  std::vector<std::int32_t> z;
  z_into(s, z);
  return z;
}

} // namespace wordstat
