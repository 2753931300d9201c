#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wordstat/word.hpp"

namespace wordstat {

// border[i] = length of the longest proper border of s[0..i].
inline std::vector<std::int32_t> border_array(std::span<const std::uint8_t> s) {
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  std::vector<std::int32_t> b(n, 0);
  for (std::int64_t i = 1; i < n; ++i) {
    std::int32_t k = b[i - 1];
    while (k > 0 && s[i] != s[k]) k = b[k - 1];
    if (s[i] == s[k]) ++k;
    b[i] = k;
  }
  return b;
}

/// Smallest p >= 1 with w[i] = w[i+p] for all valid i.
inline std::int64_t minimal_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("minimal_period: empty word");
  const auto b = border_array(w.span());
  return static_cast<std::int64_t>(w.size()) - b.back();
}

/// (xi, p) with w = xi^p and xi primitive; p = 1 iff w itself is primitive.
inline std::pair<Word, std::int64_t> primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  const std::int64_t p = minimal_period(w);
  if (p < n && n % p == 0) return {w.prefix(static_cast<std::size_t>(p)), n / p};
  return {w, 1};
}

/// True iff w is not a proper power xi^l with l >= 2.
inline bool is_prime_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_prime_word: empty word");
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  const std::int64_t p = minimal_period(w);
  return !(p < n && n % p == 0);
}

/// Cyclic rotation a_i .. a_k a_1 .. a_{i-1}; i is 1-based in [1, |w|].
inline Word rotate(const Word& w, std::int64_t i) {
  if (w.empty()) throw std::invalid_argument("rotate: empty word");
  const auto n = static_cast<std::int64_t>(w.size());
  if (i < 1 || i > n) throw std::invalid_argument("rotate: index out of range");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t)
    out.push_back(w[static_cast<std::size_t>((i - 1 + t) % n)]);
  return Word(std::move(out));
}

} // namespace wordstat
