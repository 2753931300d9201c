#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wordstat/suffix_automaton.hpp"
#include "wordstat/word.hpp"

namespace wordstat {

/// Number of distinct factors of length k.
inline std::int64_t factor_complexity(const Word& w, std::int64_t k) {
  if (k < 1 || k > static_cast<std::int64_t>(w.size()))
    throw std::invalid_argument("factor_complexity: k out of range");
  return SuffixAutomaton(w).distinct_factor_counts()[static_cast<std::size_t>(k)];
}

/// Smallest k <= k_max with factor complexity p(k) <= k, if any. A word with
/// such a k has the factor statistics of an eventually periodic word;
/// independent cross-evidence for the classifier. k_max is clamped to |w|/2
/// so the length-k statistics stay meaningful.
inline std::optional<std::int64_t> morse_hedlund_check(const Word& w, std::int64_t k_max) {
  const std::int64_t half = static_cast<std::int64_t>(w.size()) / 2;
  const std::int64_t bound = std::min(k_max, half);
  if (bound < 1) return std::nullopt;
  const auto counts = SuffixAutomaton(w).distinct_factor_counts();
  for (std::int64_t k = 1; k <= bound; ++k)
    if (counts[static_cast<std::size_t>(k)] <= k) return k;
  return std::nullopt;
}

} // namespace wordstat
