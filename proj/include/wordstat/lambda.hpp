#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordstat/bigcount.hpp"
#include "wordstat/periodicity.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/runs.hpp"
#include "wordstat/sigma.hpp"
#include "wordstat/word.hpp"

namespace wordstat {

/// One power factor eta^ell achieving a score: eta has length `eta_length`,
/// the occurrence starts at `position` (1-based), and
/// score = eta_length^2 * (exponent+1)^3.
struct PowerWitness {
  std::int64_t eta_length = 0;
  std::int64_t exponent = 0;
  std::int64_t position = 0;
  BigCount score = 0;
};

/// Max over all powers eta^ell occurring in w of |eta|^2 (ell+1)^3, including
/// first powers (ell = 1), by brute force over every start position, factor
/// length, and maximal exponent.
inline BigCount lambda_naive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lambda_naive: empty word");
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  const std::uint8_t* d = w.data().data();
  BigCount best = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t k = 1; k <= n - i; ++k) {
      std::int64_t ell = 1;
      std::int64_t pos = i + k;
      while (pos + k <= n && std::equal(d + pos, d + pos + k, d + i)) {
        ++ell;
        pos += k;
      }
      const std::uint64_t kk = static_cast<std::uint64_t>(k);
      const std::uint64_t e1 = static_cast<std::uint64_t>(ell + 1);
      const BigCount score = static_cast<BigCount>(kk * kk) * e1 * e1 * e1;
      if (score > best) best = score;
    }
  }
  return best;
}

namespace detail {

// Best-scoring power. Every factor occurrence with exponent >= 2 lies inside
// some maximal repetition whose minimal period divides the factor length, so
// enumerating period multiples per run plus the whole-word ell = 1 candidate
// 8n^2 is exhaustive. Ties break to the smallest eta length, then the
// smallest position.
inline PowerWitness best_power_witness(std::int64_t n, const std::vector<Run>& rl,
                                       bool require_square) {
  PowerWitness best;
  if (!require_square && n > 0) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    best = PowerWitness{n, 1, 1, static_cast<BigCount>(un * un) * 8};
  }
  auto consider = [&best](std::int64_t q, std::int64_t ell, std::int64_t pos) {
    const std::uint64_t qq = static_cast<std::uint64_t>(q);
    const std::uint64_t e1 = static_cast<std::uint64_t>(ell + 1);
    const BigCount score = static_cast<BigCount>(qq * qq) * e1 * e1 * e1;
    if (score > best.score ||
        (score == best.score &&
         (q < best.eta_length || (q == best.eta_length && pos < best.position))))
      best = PowerWitness{q, ell, pos, score};
  };
  for (const Run& run : rl) {
    const std::int64_t len = run.length();
    for (std::int64_t q = run.period; q <= len; q += run.period) {
      const std::int64_t ell = len / q;
      if (require_square && ell < 2) break;
      consider(q, ell, run.start);
    }
  }
  return best;
}

} // namespace detail

/// Same value as lambda_naive, via the runs decomposition; near-linear time.
inline BigCount lambda(std::span<const std::uint8_t> w) {
  if (w.empty()) throw std::invalid_argument("lambda: empty word");
  return detail::best_power_witness(static_cast<std::int64_t>(w.size()), runs(w), false).score;
}

inline BigCount lambda(const Word& w) { return lambda(w.span()); }

struct LambdaProfile {
  Profile profile;
  std::vector<PowerWitness> witnesses;  // one per checkpoint, deterministic tie-break
};

inline LambdaProfile lambda_profile(const Word& w, const std::vector<std::int64_t>& checkpoints) {
  const std::int64_t n = static_cast<std::int64_t>(w.size());
  validate_checkpoints(checkpoints, n);
  LambdaProfile out;
  out.profile.checkpoints = checkpoints;
  out.profile.values.reserve(checkpoints.size());
  out.witnesses.reserve(checkpoints.size());
  for (std::int64_t c : checkpoints) {
    const std::span<const std::uint8_t> prefix(w.data().data(), static_cast<std::size_t>(c));
    const PowerWitness wit = detail::best_power_witness(c, runs(prefix), false);
    out.profile.values.push_back(wit.score);
    out.witnesses.push_back(wit);
  }
  return out;
}

/// Best power with exponent >= 2 per checkpoint; exponent and eta_length are
/// 0 when the prefix contains no square (binary words shorter than 4 only).
struct DominantPower {
  std::int64_t n = 0;
  std::int64_t exponent = 0;
  std::int64_t eta_length = 0;
};

inline std::vector<DominantPower> dominant_power_evidence(const Word& w,
                                                          const std::vector<std::int64_t>& checkpoints) {
  validate_checkpoints(checkpoints, static_cast<std::int64_t>(w.size()));
  std::vector<DominantPower> out;
  out.reserve(checkpoints.size());
  for (std::int64_t c : checkpoints) {
    const std::span<const std::uint8_t> prefix(w.data().data(), static_cast<std::size_t>(c));
    const PowerWitness wit = detail::best_power_witness(c, runs(prefix), true);
    out.push_back(DominantPower{c, wit.exponent, wit.eta_length});
  }
  return out;
}

/// Second differences of sigma along omega eta^ell, recentred by 2 k^2 ell:
///   R(ell) = Sigma(omega eta^{ell+2}) - 2 Sigma(omega eta^{ell+1})
///            + Sigma(omega eta^ell) - 2 k^2 ell,  k = |eta|.
/// Requires eta prime, the last symbols of omega and eta to differ, and
/// eta^ell to occur exactly once in omega eta^ell; each residual then lies in
/// [0, 2k^4 + 3k).
inline std::vector<std::int64_t> second_difference_residuals(const Word& omega, const Word& eta,
                                                             const std::vector<std::int64_t>& ell_values) {
  if (omega.empty() || eta.empty())
    throw std::invalid_argument("second_difference_residuals: empty input");
  if (!is_prime_word(eta))
    throw std::invalid_argument("second_difference_residuals: hypothesis 1 failed (eta is not prime)");
  const std::int64_t k = static_cast<std::int64_t>(eta.size());
  if (omega[omega.size() - 1] == eta[eta.size() - 1])
    throw std::invalid_argument(
        "second_difference_residuals: hypothesis 2 failed (omega and eta end with the same symbol)");

  std::vector<std::int64_t> out;
  out.reserve(ell_values.size());
  for (std::int64_t ell : ell_values) {
    if (ell < 2)
      throw std::invalid_argument("second_difference_residuals: hypothesis 3 failed (ell < 2)");
    Word base = omega;
    Word power;  // eta^ell
    for (std::int64_t t = 0; t < ell; ++t) {
      base.append(eta);
      power.append(eta);
    }
    if (factor_count(base, power) != 1)
      throw std::invalid_argument(
          "second_difference_residuals: hypothesis 3 failed (eta^ell occurs more than once in omega eta^ell) "
          "at ell=" + std::to_string(ell));
    const __int128 s0 = static_cast<__int128>(sigma(base));
    base.append(eta);
    const __int128 s1 = static_cast<__int128>(sigma(base));
    base.append(eta);
    const __int128 s2 = static_cast<__int128>(sigma(base));
    const __int128 residual = s2 - 2 * s1 + s0 - static_cast<__int128>(2) * k * k * ell;
    out.push_back(static_cast<std::int64_t>(residual));
  }
  return out;
}

} // namespace wordstat
