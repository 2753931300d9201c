#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordstat/bigcount.hpp"
#include "wordstat/word.hpp"

namespace wordstat {

/// Suffix automaton over the binary alphabet, built online. Each non-initial
/// state is an equivalence class of factors sharing the same occurrence set;
/// the class covers lengths (len(link(v)), len(v)].
///
/// Classical size bounds hold: at most 2n-1 states and 3n-4 transitions for
/// a word of length n >= 3.
class SuffixAutomaton {
public:
  struct State {
    std::int32_t len = 0;
    std::int32_t link = -1;
    std::int32_t next[2] = {-1, -1};
  };

  SuffixAutomaton() { reset(0); }

  explicit SuffixAutomaton(std::span<const std::uint8_t> w) {
    reset(static_cast<std::int64_t>(w.size()));
    for (std::uint8_t c : w) extend(c);
  }

  explicit SuffixAutomaton(const Word& w) : SuffixAutomaton(w.span()) {}

  void extend(std::uint8_t c) {
    const std::int32_t cur = new_state();
    st_[cur].len = st_[last_].len + 1;
    is_clone_.push_back(0);
    std::int32_t p = last_;
    while (p != -1 && st_[p].next[c] == -1) {
      st_[p].next[c] = cur;
      p = st_[p].link;
    }
    if (p == -1) {
      st_[cur].link = 0;
    } else {
      const std::int32_t q = st_[p].next[c];
      if (st_[p].len + 1 == st_[q].len) {
        st_[cur].link = q;
      } else {
        const std::int32_t clone = new_state();
        st_[clone] = st_[q];
        st_[clone].len = st_[p].len + 1;
        is_clone_.push_back(1);
        while (p != -1 && st_[p].next[c] == q) {
          st_[p].next[c] = clone;
          p = st_[p].link;
        }
        st_[q].link = clone;
        st_[cur].link = clone;
      }
    }
    last_ = cur;
    ++length_;
  }

  std::int64_t word_length() const { return length_; }
  std::int64_t state_count() const { return static_cast<std::int64_t>(st_.size()); }

  std::int64_t transition_count() const {
    std::int64_t t = 0;
    for (const State& s : st_) t += (s.next[0] != -1) + (s.next[1] != -1);
    return t;
  }

  const State& state(std::int64_t i) const { return st_[static_cast<std::size_t>(i)]; }

  /// Occurrence count per state for the word consumed so far: the number of
  /// occurrences of every factor in the state's class. Propagates endpoint
  /// marks up the suffix-link tree in decreasing max-length order.
  std::vector<std::int64_t> occurrence_counts() const {
    const std::int64_t m = state_count();
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(m), 0);
    for (std::int64_t v = 0; v < m; ++v)
      if (!is_clone_[static_cast<std::size_t>(v)] && v != 0) cnt[static_cast<std::size_t>(v)] = 1;
    for (std::int64_t v : states_by_len_desc()) {
      const std::int32_t l = st_[static_cast<std::size_t>(v)].link;
      if (l >= 0) cnt[static_cast<std::size_t>(l)] += cnt[static_cast<std::size_t>(v)];
    }
    return cnt;
  }

  /// Sum over all nonempty factors of the squared occurrence count, i.e. per
  /// state cnt^2 * (len - len(link)).
  BigCount sigma() const {
    const auto cnt = occurrence_counts();
    BigCount total = 0;
    for (std::int64_t v = 1; v < state_count(); ++v) {
      const State& s = st_[static_cast<std::size_t>(v)];
      const std::uint64_t c = static_cast<std::uint64_t>(cnt[static_cast<std::size_t>(v)]);
      const std::uint64_t span = static_cast<std::uint64_t>(s.len - st_[static_cast<std::size_t>(s.link)].len);
      total += static_cast<BigCount>(c * c) * span;
    }
    return total;
  }

  /// Number of distinct factors of each length 1..n, via the per-state
  /// length ranges (difference array over (len(link), len]).
  std::vector<std::int64_t> distinct_factor_counts() const {
    std::vector<std::int64_t> diff(static_cast<std::size_t>(length_) + 2, 0);
    for (std::int64_t v = 1; v < state_count(); ++v) {
      const State& s = st_[static_cast<std::size_t>(v)];
      const std::int32_t lo = st_[static_cast<std::size_t>(s.link)].len + 1;
      const std::int32_t hi = s.len;
      diff[static_cast<std::size_t>(lo)] += 1;
      diff[static_cast<std::size_t>(hi) + 1] -= 1;
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(length_) + 1, 0);
    std::int64_t running = 0;
    for (std::int64_t k = 1; k <= length_; ++k) {
      running += diff[static_cast<std::size_t>(k)];
      out[static_cast<std::size_t>(k)] = running;
    }
    return out;
  }

private:
  std::int32_t new_state() {
    st_.emplace_back();
    return static_cast<std::int32_t>(st_.size() - 1);
  }

  void reset(std::int64_t expected_length) {
    st_.clear();
    is_clone_.clear();
    if (expected_length > 0) {
      st_.reserve(static_cast<std::size_t>(2 * expected_length));
      is_clone_.reserve(static_cast<std::size_t>(2 * expected_length));
    }
    st_.emplace_back();
    is_clone_.push_back(0);
    last_ = 0;
    length_ = 0;
  }

  // Counting sort by state length, descending.
  std::vector<std::int64_t> states_by_len_desc() const {
    const std::int64_t m = state_count();
    std::vector<std::int64_t> bucket(static_cast<std::size_t>(length_) + 2, 0);
    for (std::int64_t v = 0; v < m; ++v) ++bucket[static_cast<std::size_t>(st_[static_cast<std::size_t>(v)].len)];
    for (std::size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
    std::vector<std::int64_t> order(static_cast<std::size_t>(m));
    for (std::int64_t v = m - 1; v >= 0; --v)
      order[static_cast<std::size_t>(--bucket[static_cast<std::size_t>(st_[static_cast<std::size_t>(v)].len)])] = v;
    std::vector<std::int64_t> rev(order.rbegin(), order.rend());
    return rev;
  }

  std::vector<State> st_;
  std::vector<std::uint8_t> is_clone_;
  std::int32_t last_ = 0;
  std::int64_t length_ = 0;
};

} // namespace wordstat
