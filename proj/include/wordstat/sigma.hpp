#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "wordstat/bigcount.hpp"
#include "wordstat/suffix_automaton.hpp"
#include "wordstat/word.hpp"
#include "wordstat/zfunction.hpp"

namespace wordstat {

/// Number of positions at which xi occurs in w; 0 when |xi| > |w|.
inline std::int64_t factor_count(const Word& w, const Word& xi) {
  if (xi.empty()) throw std::invalid_argument("factor_count: empty factor");
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  const std::int64_t k = static_cast<std::int64_t>(xi.size());
  std::int64_t count = 0;
  for (std::int64_t i = 0; i + k <= n; ++i) {
    bool match = true;
    for (std::int64_t t = 0; t < k; ++t)
      if (w[static_cast<std::size_t>(i + t)] != xi[static_cast<std::size_t>(t)]) {
        match = false;
        break;
      }
    count += match;
  }
  return count;
}

/// Occurrences of xi in w that end within the last m positions, i.e. with
/// start index i in [max(0, n-m-k+1), n-k]. This is the windowed count used
/// by the increment identity below.
inline std::int64_t suffix_window_count(const Word& w, const Word& xi, std::int64_t m) {
  if (xi.empty()) throw std::invalid_argument("suffix_window_count: empty factor");
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  const std::int64_t k = static_cast<std::int64_t>(xi.size());
  if (m < 1 || m > n) throw std::invalid_argument("suffix_window_count: m out of range");
  if (k > n) throw std::invalid_argument("suffix_window_count: factor longer than word");
  std::int64_t count = 0;
  for (std::int64_t i = std::max<std::int64_t>(0, n - m - k + 1); i + k <= n; ++i) {
    bool match = true;
    for (std::int64_t t = 0; t < k; ++t)
      if (w[static_cast<std::size_t>(i + t)] != xi[static_cast<std::size_t>(t)]) {
        match = false;
        break;
      }
    count += match;
  }
  return count;
}

/// Sum of squared occurrence counts over all nonempty factors, by direct
/// enumeration of the O(n^2) factor occurrences into an associative counter.
/// Reference path; quadratic space in distinct factors.
inline BigCount sigma_naive(const Word& w) {
  const std::string text = w.to_string();
  const std::size_t n = text.size();
  std::unordered_map<std::string_view, std::int64_t> counts;
  counts.reserve(n * 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t len = 1; len <= n - i; ++len)
      ++counts[std::string_view(text.data() + i, len)];
  BigCount total = 0;
  for (const auto& [factor, c] : counts)
    total += static_cast<BigCount>(static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(c));
  return total;
}

/// Fast path for the same sum: suffix-automaton accumulation, O(n).
inline BigCount sigma(std::span<const std::uint8_t> w) {
  if (w.empty()) return 0;
  return SuffixAutomaton(w).sigma();
}

inline BigCount sigma(const Word& w) { return sigma(w.span()); }

/// S(w) = sum over all nonempty suffixes xi of w of the occurrence count
/// |w|_xi. Computed from the Z-array of the reversed word: an occurrence of
/// a suffix ending at position e contributes for every length up to the
/// longest common suffix of the prefixes ending at e and n.
inline BigCount suffix_occurrence_sum(std::span<const std::uint8_t> w) {
  if (w.empty()) throw std::invalid_argument("suffix_occurrence_sum: empty word");
  std::vector<std::uint8_t> rev(w.rbegin(), w.rend());
  const auto z = z_function(std::span<const std::uint8_t>(rev.data(), rev.size()));
  std::uint64_t s = static_cast<std::uint64_t>(w.size());
  for (std::size_t i = 1; i < rev.size(); ++i) s += static_cast<std::uint64_t>(z[i]);
  return s;
}

inline BigCount suffix_occurrence_sum(const Word& w) { return suffix_occurrence_sum(w.span()); }

/// Checks the increment identity
///   Sigma(omega eta) - Sigma(omega)
///     = sum_xi 2 |omega eta|_{xi,m} |omega|_xi + |omega eta|_{xi,m}^2
/// with m = |eta|, by direct enumeration of both sides. Test utility; must
/// return true on every input.
inline bool sigma_increment_identity_check(const Word& omega, const Word& eta) {
  if (omega.empty() || eta.empty())
    throw std::invalid_argument("sigma_increment_identity_check: empty input");
  Word w = omega;
  w.append(eta);
  const std::int64_t m = static_cast<std::int64_t>(eta.size());

  const BigCount lhs = sigma_naive(w) - sigma_naive(omega);

  // Every factor with a nonzero windowed count ends in the last m positions;
  // enumerating the distinct factors of w covers all contributors.
  const std::string text = w.to_string();
  std::unordered_set<std::string_view> factors;
  for (std::size_t i = 0; i < text.size(); ++i)
    for (std::size_t len = 1; len <= text.size() - i; ++len)
      factors.insert(std::string_view(text.data() + i, len));

  BigCount rhs = 0;
  for (std::string_view f : factors) {
    const Word xi = Word::from_string(f);
    const std::int64_t wc =
        (static_cast<std::int64_t>(xi.size()) <= static_cast<std::int64_t>(w.size()))
            ? suffix_window_count(w, xi, m)
            : 0;
    if (wc == 0) continue;
    const std::int64_t base = factor_count(omega, xi);
    rhs += static_cast<BigCount>(2 * static_cast<std::uint64_t>(wc) * static_cast<std::uint64_t>(base) +
                                 static_cast<std::uint64_t>(wc) * static_cast<std::uint64_t>(wc));
  }
  return lhs == rhs;
}

} // namespace wordstat
