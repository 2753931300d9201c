#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "wordstat/complexity.hpp"
#include "wordstat/lambda.hpp"
#include "wordstat/periodicity.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/ratios.hpp"
#include "wordstat/word.hpp"

namespace wordstat {

/// Finite-sample decision rule for "does Sigma/n^3 converge to a positive
/// level". The underlying statement is asymptotic; every threshold here is a
/// calibrated artifact default, echoed into each verdict.
struct ClassifierConfig {
  std::int64_t min_length = 1 << 14;
  double eps_osc = 0.05;            // flatness: tail max/min <= 1 + eps_osc
  std::int64_t k_max = 64;          // largest admissible recovered period
  double theta_pos = 1.0 / (3.0 * 64.0);  // positive-level floor 1/(3 k_max)
  double tail_fraction = 0.25;      // tail window: n >= (1 - f) * n_max
  double confirm_tail_fraction = 0.25;  // scan must confirm >= this much tail
  double checkpoint_ratio = 1.0905077326652577;  // 2^(1/8)
};

enum class PeriodicityLabel { eventually_periodic, not_eventually_periodic, inconclusive };

inline std::string to_string(PeriodicityLabel label) {
  switch (label) {
    case PeriodicityLabel::eventually_periodic: return "eventually-periodic";
    case PeriodicityLabel::not_eventually_periodic: return "not-eventually-periodic";
    case PeriodicityLabel::inconclusive: return "inconclusive";
  }
  return "?";
}

struct VerdictEvidence {
  double tail_min = 0;
  double tail_max = 0;
  double oscillation = 0;
  std::optional<std::int64_t> morse_hedlund_k;
  DominantPower dominant_power;
};

struct Verdict {
  PeriodicityLabel label = PeriodicityLabel::inconclusive;
  double estimated_limit = 0;
  std::optional<std::int64_t> estimated_period;
  VerdictEvidence evidence;
  ClassifierConfig config;
};

/// Smallest j (0-based) such that w[x] = w[x+p] for all j <= x < n-p; n if
/// even the last comparison fails.
inline std::int64_t period_tail_start(const Word& w, std::int64_t p) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (p < 1) throw std::invalid_argument("period_tail_start: p must be >= 1");
  if (p >= n) return 0;  // no comparisons constrain the tail
  std::int64_t j = 0;
  for (std::int64_t x = n - p - 1; x >= 0; --x) {
    if (w[static_cast<std::size_t>(x)] != w[static_cast<std::size_t>(x + p)]) {
      j = x + 1;
      break;
    }
  }
  return j;
}

/// Classify a finite prefix as eventually periodic or not.
///
/// Label is eventually-periodic iff all of:
///   (a) the Sigma/n^3 tail is flat: oscillation <= 1 + eps_osc,
///   (b) its level L (tail median) is at least theta_pos,
///   (c) k = round(1/(3L)) lies in [1, k_max],
///   (d) a direct scan confirms period k from some j <= n - n/4, and the
///       minimal period of that confirmed tail divides k.
/// (a) or (b) failing decisively yields not-eventually-periodic; a flat
/// positive tail whose period cannot be confirmed is inconclusive. A
/// disagreeing factor-complexity cross-check also forces inconclusive.
inline Verdict classify(const Word& w, const ClassifierConfig& config = {}) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  if (n < config.min_length)
    throw std::invalid_argument("classify: word shorter than min_length (" +
                                std::to_string(config.min_length) + ")");

  Verdict verdict;
  verdict.config = config;

  const auto cps = geometric_checkpoints(n, config.checkpoint_ratio);
  const Profile prof = sigma_profile(w, cps);
  const RatioSeries rs = ratio_series(prof, 3);
  const TailStats tail = tail_oscillation(rs, config.tail_fraction);
  const double level = tail_median(rs, config.tail_fraction);

  verdict.estimated_limit = level;
  verdict.evidence.tail_min = tail.min;
  verdict.evidence.tail_max = tail.max;
  verdict.evidence.oscillation = tail.osc;
  verdict.evidence.morse_hedlund_k = morse_hedlund_check(w, config.k_max);
  verdict.evidence.dominant_power = dominant_power_evidence(w, {n}).front();

  const bool flat = tail.osc <= 1.0 + config.eps_osc;
  const bool positive = level >= config.theta_pos;

  std::optional<std::int64_t> confirmed_period;
  if (flat && positive) {
    const std::int64_t k = static_cast<std::int64_t>(std::llround(1.0 / (3.0 * level)));
    if (k >= 1 && k <= config.k_max) {
      const std::int64_t j = period_tail_start(w, k);
      const std::int64_t confirm_len =
          static_cast<std::int64_t>(std::llround(config.confirm_tail_fraction * static_cast<double>(n)));
      if (j <= n - confirm_len) {
        const Word tail_word = w.subword(static_cast<std::size_t>(j), static_cast<std::size_t>(n - j));
        const std::int64_t p_tail = minimal_period(tail_word);
        if (k % p_tail == 0) confirmed_period = k;
      }
    }
    verdict.label = confirmed_period ? PeriodicityLabel::eventually_periodic
                                     : PeriodicityLabel::inconclusive;
  } else {
    verdict.label = PeriodicityLabel::not_eventually_periodic;
  }

  // Factor-complexity cross-check: disagreement is never silently resolved.
  const bool mh_periodic = verdict.evidence.morse_hedlund_k.has_value();
  if (verdict.label == PeriodicityLabel::eventually_periodic && !mh_periodic)
    verdict.label = PeriodicityLabel::inconclusive;
  else if (verdict.label == PeriodicityLabel::not_eventually_periodic && mh_periodic)
    verdict.label = PeriodicityLabel::inconclusive;

  if (verdict.label == PeriodicityLabel::eventually_periodic)
    verdict.estimated_period = confirmed_period;
  return verdict;
}

} // namespace wordstat
