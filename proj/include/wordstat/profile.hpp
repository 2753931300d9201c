#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wordstat/bigcount.hpp"
#include "wordstat/suffix_automaton.hpp"
#include "wordstat/word.hpp"

namespace wordstat {

/// Checkpointed series of exact functional values over prefixes.
struct Profile {
  std::vector<std::int64_t> checkpoints;  // strictly increasing prefix lengths
  std::vector<BigCount> values;

  bool empty() const { return checkpoints.empty(); }
  std::size_t size() const { return checkpoints.size(); }
};

/// Geometric scheme ceil(n_max * r^-j), deduplicated and sorted increasing.
/// The default ratio 2^(1/8) takes ~9% steps, enough for limit estimation.
inline std::vector<std::int64_t> geometric_checkpoints(std::int64_t n_max,
                                                       double ratio = std::pow(2.0, 1.0 / 8.0)) {
  if (n_max < 1) throw std::invalid_argument("geometric_checkpoints: n_max < 1");
  if (!(ratio > 1.0)) throw std::invalid_argument("geometric_checkpoints: ratio must be > 1");
  std::vector<std::int64_t> cps;
  for (std::int64_t j = 0;; ++j) {
    const std::int64_t c = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(n_max) * std::pow(ratio, -static_cast<double>(j))));
    if (cps.empty() || cps.back() != c) cps.push_back(c);
    if (c == 1) break;
  }
  std::reverse(cps.begin(), cps.end());
  return cps;
}

inline std::vector<std::int64_t> dense_checkpoints(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("dense_checkpoints: n_max < 1");
  std::vector<std::int64_t> cps(static_cast<std::size_t>(n_max));
  for (std::int64_t i = 0; i < n_max; ++i) cps[static_cast<std::size_t>(i)] = i + 1;
  return cps;
}

inline void validate_checkpoints(const std::vector<std::int64_t>& cps, std::int64_t n) {
  std::int64_t prev = 0;
  for (std::int64_t c : cps) {
    if (c <= prev) throw std::invalid_argument("checkpoints must be strictly increasing and >= 1");
    if (c > n) throw std::invalid_argument("checkpoint exceeds word length");
    prev = c;
  }
}

namespace detail {

// Dense path: chain the one-step recurrence
//   sigma(prefix_n) = sigma(prefix_{n-1}) + 2 S(prefix_n) - n
// where S is the suffix-occurrence sum, read off a Z-array of the reversed
// prefix. O(n) per prefix with a small constant; quadratic overall.
inline Profile sigma_profile_dense(const Word& w, const std::vector<std::int64_t>& checkpoints) {
  Profile prof;
  prof.checkpoints = checkpoints;
  prof.values.reserve(checkpoints.size());
  const std::int64_t m = checkpoints.back();
  std::vector<std::uint8_t> rev;
  rev.reserve(static_cast<std::size_t>(m));
  std::vector<std::int32_t> z;
  BigCount running = 0;
  for (std::int64_t n = 1; n <= m; ++n) {
    rev.insert(rev.begin(), w[static_cast<std::size_t>(n - 1)]);
    z_into({rev.data(), rev.size()}, z);
    std::uint64_t s = static_cast<std::uint64_t>(n);
    for (std::size_t i = 1; i < z.size(); ++i) s += static_cast<std::uint64_t>(z[i]);
    running += 2 * static_cast<BigCount>(s) - static_cast<std::uint64_t>(n);
    prof.values.push_back(running);
  }
  return prof;
}

} // namespace detail

/// Sigma at each checkpointed prefix. Dense checkpoint lists (1..m) chain the
/// suffix-occurrence recurrence, O(n) per prefix; sparse lists snapshot one
/// online automaton, O(sum of checkpoint lengths) total. Dense profiles are
/// supported up to n = 1e5; pass sparse (e.g. geometric) checkpoints beyond.
inline Profile sigma_profile(const Word& w, const std::vector<std::int64_t>& checkpoints) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  validate_checkpoints(checkpoints, n);
  constexpr std::int64_t kDenseLimit = 100000;
  if (static_cast<std::int64_t>(checkpoints.size()) > kDenseLimit)
    throw std::invalid_argument("sigma_profile: too many checkpoints (use a sparse scheme)");
  if (!checkpoints.empty() && checkpoints.back() > kDenseLimit &&
      static_cast<std::int64_t>(checkpoints.size()) * 4 > checkpoints.back())
    throw std::invalid_argument("sigma_profile: dense profiles are limited to n <= 100000");
  if (!checkpoints.empty() && checkpoints.front() == 1 &&
      static_cast<std::int64_t>(checkpoints.size()) == checkpoints.back())
    return detail::sigma_profile_dense(w, checkpoints);

  Profile prof;
  prof.checkpoints = checkpoints;
  prof.values.reserve(checkpoints.size());
  SuffixAutomaton sa;
  std::int64_t pos = 0;
  for (std::int64_t c : checkpoints) {
    while (pos < c) sa.extend(w[static_cast<std::size_t>(pos++)]);
    prof.values.push_back(sa.sigma());
  }
  return prof;
}

} // namespace wordstat
