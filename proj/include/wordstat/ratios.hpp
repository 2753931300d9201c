#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wordstat/bigcount.hpp"
#include "wordstat/profile.hpp"

namespace wordstat {

/// Normalized view of a profile: value / n^exponent, exponent in {2, 3}.
/// The exact integers stay in the Profile; this is the floating-point view
/// all limit estimation works on.
struct RatioSeries {
  std::vector<std::int64_t> checkpoints;
  std::vector<double> ratios;
  int exponent = 3;
};

inline RatioSeries ratio_series(const Profile& profile, int exponent) {
  if (exponent != 2 && exponent != 3)
    throw std::invalid_argument("ratio_series: exponent must be 2 or 3");
  if (profile.empty()) throw std::invalid_argument("ratio_series: empty profile");
  RatioSeries rs;
  rs.checkpoints = profile.checkpoints;
  rs.exponent = exponent;
  rs.ratios.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double n = static_cast<double>(profile.checkpoints[i]);
    const double denom = (exponent == 2) ? n * n : n * n * n;
    rs.ratios.push_back(to_double(profile.values[i]) / denom);
  }
  return rs;
}

struct TailStats {
  double min = 0;
  double max = 0;
  double osc = 0;  // max/min; +inf when min is 0
};

/// Min, max and oscillation of the ratios over the value-based tail window
/// n >= (1 - tail_fraction) * n_max. Needs at least 4 tail checkpoints.
inline TailStats tail_oscillation(const RatioSeries& series, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw std::invalid_argument("tail_oscillation: tail_fraction out of (0, 1]");
  if (series.checkpoints.empty())
    throw std::invalid_argument("tail_oscillation: empty series");
  const double n_max = static_cast<double>(series.checkpoints.back());
  const double lo = (1.0 - tail_fraction) * n_max;
  TailStats st{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  std::int64_t count = 0;
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    if (static_cast<double>(series.checkpoints[i]) < lo) continue;
    st.min = std::min(st.min, series.ratios[i]);
    st.max = std::max(st.max, series.ratios[i]);
    ++count;
  }
  if (count < 4) throw std::invalid_argument("tail_oscillation: fewer than 4 tail checkpoints");
  st.osc = (st.min > 0.0) ? st.max / st.min : std::numeric_limits<double>::infinity();
  return st;
}

/// Median of the ratios over the same tail window.
inline double tail_median(const RatioSeries& series, double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw std::invalid_argument("tail_median: tail_fraction out of (0, 1]");
  if (series.checkpoints.empty()) throw std::invalid_argument("tail_median: empty series");
  const double lo = (1.0 - tail_fraction) * static_cast<double>(series.checkpoints.back());
  std::vector<double> tail;
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i)
    if (static_cast<double>(series.checkpoints[i]) >= lo) tail.push_back(series.ratios[i]);
  if (tail.empty()) throw std::invalid_argument("tail_median: empty tail window");
  std::sort(tail.begin(), tail.end());
  const std::size_t m = tail.size();
  return (m % 2 == 1) ? tail[m / 2] : 0.5 * (tail[m / 2 - 1] + tail[m / 2]);
}

} // namespace wordstat
