#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "wordstat/word.hpp"
#include "wordstat/zfunction.hpp"

namespace wordstat {

/// Maximal repetition: the factor w[start..end] (1-based, inclusive) has
/// minimal period `period`, covers at least two full periods, and extending
/// it by one symbol on either side breaks that period.
struct Run {
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t period = 0;

  std::int64_t length() const { return end - start + 1; }
  std::int64_t exponent() const { return length() / period; }

  friend bool operator==(const Run&, const Run&) = default;
};

namespace detail {

struct RunCollector {
  std::span<const std::uint8_t> w;
  // (start, end) packed -> smallest period seen; the minimal period of a
  // maximal repetition is always among the emitted candidates.
  std::unordered_map<std::uint64_t, std::int64_t> best;

  // i, j are 0-based half-open. Candidates are maximal inside their window;
  // keep them only when maximal in the whole word, which costs one symbol
  // comparison per side.
  void emit(std::int64_t i, std::int64_t j, std::int64_t p) {
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    if (i > 0 && w[static_cast<std::size_t>(i - 1)] == w[static_cast<std::size_t>(i - 1 + p)]) return;
    if (j < n && w[static_cast<std::size_t>(j)] == w[static_cast<std::size_t>(j - p)]) return;
    const std::uint64_t key =
        static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(j);
    auto [it, inserted] = best.try_emplace(key, p);
    if (!inserted && p < it->second) it->second = p;
  }
};

struct RunScratch {
  std::vector<std::uint8_t> ru, c1, c2;
  std::vector<std::int32_t> z_ru, z_v, z_c1, z_c2;
};

// Crossing repetitions of the window [l, r) split at m: every run that
// contains both m-1 and m holds a full period copy ending at m (case A) or
// starting at m (case B); extensions around that copy are read off four
// Z-arrays. A run contained in the window is reconstructed exactly at the
// deepest node whose window contains it, so together with the global
// maximality filter the collection is complete and exact.
inline void runs_rec(std::span<const std::uint8_t> w, std::int64_t l, std::int64_t r,
                     RunCollector& out, RunScratch& sc) {
  const std::int64_t len = r - l;
  if (len < 2) return;
  if (len <= 3) {
    // Only period 1 fits twice; emit maximal equal-symbol blocks.
    std::int64_t i = l;
    while (i < r) {
      std::int64_t j = i + 1;
      while (j < r && w[static_cast<std::size_t>(j)] == w[static_cast<std::size_t>(i)]) ++j;
      if (j - i >= 2) out.emit(i, j, 1);
      i = j;
    }
    return;
  }

  const std::int64_t m = (l + r) / 2;
  runs_rec(w, l, m, out, sc);
  runs_rec(w, m, r, out, sc);

  const std::int64_t nu = m - l;
  const std::int64_t nv = r - m;
  constexpr std::uint8_t kSep = 2;

  sc.ru.assign(static_cast<std::size_t>(nu), 0);
  for (std::int64_t t = 0; t < nu; ++t)
    sc.ru[static_cast<std::size_t>(t)] = w[static_cast<std::size_t>(m - 1 - t)];
  z_into({sc.ru.data(), sc.ru.size()}, sc.z_ru);

  const std::span<const std::uint8_t> v(w.data() + m, static_cast<std::size_t>(nv));
  z_into(v, sc.z_v);

  sc.c1.clear();
  sc.c1.reserve(static_cast<std::size_t>(nu + 2 * nv + 1));
  sc.c1.insert(sc.c1.end(), w.begin() + m, w.begin() + r);
  sc.c1.push_back(kSep);
  sc.c1.insert(sc.c1.end(), w.begin() + l, w.begin() + r);
  z_into({sc.c1.data(), sc.c1.size()}, sc.z_c1);

  sc.c2.clear();
  sc.c2.reserve(static_cast<std::size_t>(2 * nu + nv + 1));
  sc.c2.insert(sc.c2.end(), sc.ru.begin(), sc.ru.end());
  sc.c2.push_back(kSep);
  for (std::int64_t t = r - 1; t >= l; --t) sc.c2.push_back(w[static_cast<std::size_t>(t)]);
  z_into({sc.c2.data(), sc.c2.size()}, sc.z_c2);

  // Case A: period copy w[m-p .. m).
  for (std::int64_t p = 1; p <= nu; ++p) {
    const std::int64_t s = (p < nu) ? sc.z_ru[static_cast<std::size_t>(p)] : 0;
    const std::int64_t f = sc.z_c1[static_cast<std::size_t>(nv + 1 + nu - p)];
    if (s + f >= p) out.emit(m - p - s, m + f, p);
  }
  // Case B: period copy w[m .. m+p).
  for (std::int64_t p = 1; p <= nv; ++p) {
    const std::int64_t f = (p < nv) ? sc.z_v[static_cast<std::size_t>(p)] : 0;
    const std::int64_t s = sc.z_c2[static_cast<std::size_t>(nu + 1 + nv - p)];
    if (s + f >= p) out.emit(m - s, m + p + f, p);
  }
}

} // namespace detail

/// All maximal repetitions, each with its minimal period, sorted by
/// (start, period). O(n log n) divide and conquer over Z-arrays.
inline std::vector<Run> runs(std::span<const std::uint8_t> w) {
  detail::RunCollector collector{w, {}};
  detail::RunScratch scratch;
  detail::runs_rec(w, 0, static_cast<std::int64_t>(w.size()), collector, scratch);

  const std::int64_t n = static_cast<std::int64_t>(w.size());
  std::vector<Run> out;
  out.reserve(collector.best.size());
  for (const auto& [key, p] : collector.best) {
    const std::int64_t i = static_cast<std::int64_t>(key / static_cast<std::uint64_t>(n + 1));
    const std::int64_t j = static_cast<std::int64_t>(key % static_cast<std::uint64_t>(n + 1));
    out.push_back(Run{i + 1, j, p});
  }
  std::sort(out.begin(), out.end(), [](const Run& a, const Run& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return out;
}

inline std::vector<Run> runs(const Word& w) { return runs(w.span()); }

} // namespace wordstat
