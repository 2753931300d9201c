#pragma once

// Reproduction harness: every desk-scale experiment the library is expected
// to reproduce, with frozen tolerances. Used by the acceptance test suite
// and the `wordstat reproduce` command; criteria run in id order.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wordstat/classifier.hpp"
#include "wordstat/complexity.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/lambda.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/ratios.hpp"
#include "wordstat/sigma.hpp"

namespace wordstat::reproduce {

struct CheckRow {
  std::string name;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool warn_only = false;
  bool pass = true;
  std::vector<CheckRow> rows;
  double seconds = 0;

  void add(std::string name, std::string expected, std::string observed, bool ok) {
    rows.push_back(CheckRow{std::move(name), std::move(expected), std::move(observed), ok});
    if (!ok) pass = false;
  }
};

namespace detail {

inline double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline Word word_from_bits(std::uint32_t bits, int len) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) v[static_cast<std::size_t>(i)] = (bits >> (len - 1 - i)) & 1;
  return Word(std::move(v));
}

inline Word random_word(std::mt19937_64& rng, std::int64_t len) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(len));
  for (auto& b : v) b = rng() & 1;
  return Word(std::move(v));
}

struct BatteryEntry {
  std::string name;
  Word word;
  bool expect_periodic = false;
  std::int64_t expect_period = 0;  // meaningful when expect_periodic
};

// Shared classifier battery: 20 periodic words (periods 1..8, random
// primitive eta, random prefix), 10 random words, 5 sparse words, and the
// Fibonacci prefix. Deterministic by construction.
inline const std::vector<BatteryEntry>& battery() {
  static const std::vector<BatteryEntry> entries = [] {
    std::vector<BatteryEntry> out;
    for (int i = 0; i < 20; ++i) {
      const std::int64_t k = (i % 8) + 1;
      std::mt19937_64 rng(7000 + static_cast<std::uint64_t>(i));
      Word eta;
      do {
        eta = random_word(rng, k);
      } while (!is_prime_word(eta));
      const Word zeta = random_word(rng, static_cast<std::int64_t>(rng() % 17));
      out.push_back(BatteryEntry{"periodic k=" + std::to_string(k) + " #" + std::to_string(i),
                                 make_periodic(eta, zeta, 30000), true, k});
    }
    for (unsigned s = 1; s <= 10; ++s)
      out.push_back(BatteryEntry{"random seed=" + std::to_string(s), make_random(s, 100000)});
    const std::pair<std::int64_t, Rational> sparse_params[] = {
        {1, {2, 1}}, {2, {2, 1}}, {3, {2, 1}}, {1, {5, 2}}, {2, {3, 2}}};
    for (const auto& [k1, ratio] : sparse_params)
      out.push_back(BatteryEntry{"sparse k1=" + std::to_string(k1) + " ratio=" +
                                     std::to_string(ratio.num) + "/" + std::to_string(ratio.den),
                                 make_sparse(k1, ratio, 100000)});
    out.push_back(BatteryEntry{"fibonacci", make_fibonacci(100000)});
    return out;
  }();
  return entries;
}

inline const std::vector<Verdict>& battery_verdicts() {
  static const std::vector<Verdict> verdicts = [] {
    std::vector<Verdict> out;
    for (const BatteryEntry& e : battery()) out.push_back(classify(e.word));
    return out;
  }();
  return verdicts;
}

struct Theorem1Family {
  const char* eta;
  const char* zeta;
  std::int64_t k;
};

inline const std::vector<Theorem1Family>& theorem1_families() {
  static const std::vector<Theorem1Family> fams = {
      {"0", "", 1}, {"01", "111", 2}, {"011", "0", 3}, {"01101", "", 5}};
  return fams;
}

} // namespace detail

// 1. sigma oracle equivalence: exhaustive to length 16 plus 500 seeded
//    random words of length <= 200; exact match, under a minute.
inline CriterionResult criterion_sigma_oracle() {
  CriterionResult r{1, "sigma-oracle", "sigma = sigma_naive (exhaustive <=16, 500 random <=200)"};
  const double t0 = detail::now();
  std::int64_t mismatches = 0, words = 0;
  for (int len = 1; len <= 16; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = detail::word_from_bits(bits, len);
      ++words;
      if (sigma(w) != sigma_naive(w)) ++mismatches;
    }
  r.add("exhaustive words of length 1..16 (" + std::to_string(words) + ")", "0 mismatches",
        std::to_string(mismatches) + " mismatches", mismatches == 0);

  std::mt19937_64 rng(1001);
  std::int64_t rnd_mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 200);
    const Word w = detail::random_word(rng, len);
    if (sigma(w) != sigma_naive(w)) ++rnd_mismatches;
  }
  r.add("500 random words of length <= 200", "0 mismatches",
        std::to_string(rnd_mismatches) + " mismatches", rnd_mismatches == 0);
  r.seconds = detail::now() - t0;
  r.add("runtime", "< 60 s", detail::fmt(r.seconds) + " s", r.seconds < 60.0);
  return r;
}

// 2. lambda oracle equivalence: exhaustive to length 14 plus 200 random
//    words of length <= 80.
inline CriterionResult criterion_lambda_oracle() {
  CriterionResult r{2, "lambda-oracle", "lambda = lambda_naive (exhaustive <=14, 200 random <=80)"};
  const double t0 = detail::now();
  std::int64_t mismatches = 0, words = 0;
  for (int len = 1; len <= 14; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = detail::word_from_bits(bits, len);
      ++words;
      if (lambda(w) != lambda_naive(w)) ++mismatches;
    }
  r.add("exhaustive words of length 1..14 (" + std::to_string(words) + ")", "0 mismatches",
        std::to_string(mismatches) + " mismatches", mismatches == 0);

  std::mt19937_64 rng(1002);
  std::int64_t rnd_mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 80);
    const Word w = detail::random_word(rng, len);
    if (lambda(w) != lambda_naive(w)) ++rnd_mismatches;
  }
  r.add("200 random words of length <= 80", "0 mismatches",
        std::to_string(rnd_mismatches) + " mismatches", rnd_mismatches == 0);
  r.seconds = detail::now() - t0;
  r.add("runtime", "< 60 s", detail::fmt(r.seconds) + " s", r.seconds < 60.0);
  return r;
}

// 3. 48 sigma >= lambda on 1000 random words plus every acceptance-family
//    word.
inline CriterionResult criterion_lemma1() {
  CriterionResult r{3, "lemma1", "48 sigma >= lambda (1000 random <=500 + family words)"};
  const double t0 = detail::now();
  std::mt19937_64 rng(1003);
  std::int64_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 500);
    const Word w = detail::random_word(rng, len);
    if (48 * sigma(w) < lambda(w)) ++violations;
  }
  r.add("1000 random words of length <= 500", "0 violations",
        std::to_string(violations) + " violations", violations == 0);

  std::int64_t family_violations = 0, family_count = 0;
  auto check = [&](const Word& w) {
    ++family_count;
    if (48 * sigma(w) < lambda(w)) ++family_violations;
  };
  for (const auto& fam : detail::theorem1_families())
    check(make_periodic(Word::from_string(fam.eta), Word::from_string(fam.zeta), 50000));
  for (const auto& e : detail::battery()) check(e.word);
  check(make_sparse(1, Rational{2, 1}, 1 << 17));
  r.add("acceptance-family words (" + std::to_string(family_count) + ")", "0 violations",
        std::to_string(family_violations) + " violations", family_violations == 0);
  r.seconds = detail::now() - t0;
  return r;
}

// 4. sigma is maximized exactly by constant words: sigma <= n(n+1)(2n+1)/6
//    with equality iff constant, exhaustively to length 16.
inline CriterionResult criterion_sigma_max() {
  CriterionResult r{4, "sigma-max", "sigma <= n(n+1)(2n+1)/6, equality iff constant (<=16)"};
  const double t0 = detail::now();
  std::int64_t bound_violations = 0, equality_errors = 0;
  for (int len = 1; len <= 16; ++len) {
    const BigCount bound = static_cast<BigCount>(static_cast<std::uint64_t>(len)) * (len + 1) *
                           (2 * len + 1) / 6;
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = detail::word_from_bits(bits, len);
      const BigCount s = sigma(w);
      if (s > bound) ++bound_violations;
      const bool constant = (bits == 0) || (bits == (1u << len) - 1);
      if ((s == bound) != constant) ++equality_errors;
    }
  }
  r.add("upper bound", "0 violations", std::to_string(bound_violations) + " violations",
        bound_violations == 0);
  r.add("equality exactly for the two constant words per length", "0 errors",
        std::to_string(equality_errors) + " errors", equality_errors == 0);
  r.seconds = detail::now() - t0;
  return r;
}

// 5. periodic families converge to 1/(3k): tail estimate within 5% relative
//    and classifier recovers k, at n = 5e4.
inline CriterionResult criterion_theorem1() {
  CriterionResult r{5, "theorem1", "sigma/n^3 -> 1/(3k) on periodic families (n = 5e4)"};
  const double t0 = detail::now();
  for (const auto& fam : detail::theorem1_families()) {
    const Word w =
        make_periodic(Word::from_string(fam.eta), Word::from_string(fam.zeta), 50000);
    const Profile prof = sigma_profile(w, geometric_checkpoints(50000));
    const double level = tail_median(ratio_series(prof, 3), 0.25);
    const double target = 1.0 / (3.0 * static_cast<double>(fam.k));
    const double rel = std::fabs(level / target - 1.0);
    const std::string tag = "eta=" + std::string(fam.eta) +
                            (fam.zeta[0] ? " zeta=" + std::string(fam.zeta) : "") +
                            " (k=" + std::to_string(fam.k) + ")";
    r.add(tag + " tail estimate", "within 5% of " + detail::fmt(target),
          detail::fmt(level) + " (rel " + detail::fmt(rel) + ")", rel <= 0.05);

    const Verdict v = classify(w);
    const bool ok = v.label == PeriodicityLabel::eventually_periodic && v.estimated_period &&
                    *v.estimated_period == fam.k;
    r.add(tag + " classifier", "eventually-periodic, period " + std::to_string(fam.k),
          to_string(v.label) +
              (v.estimated_period ? ", period " + std::to_string(*v.estimated_period) : ""),
          ok);
  }
  r.seconds = detail::now() - t0;
  r.add("runtime", "< 120 s", detail::fmt(r.seconds) + " s", r.seconds < 120.0);
  return r;
}

// 6. random words: sigma/n^2 in [1.45, 1.55] and sigma/n^3 <= 1e-3 at
//    n = 1e5 for five fixed seeds; classified not eventually periodic.
inline CriterionResult criterion_random_limit() {
  CriterionResult r{6, "random-limit", "random words: sigma/n^2 near 3/2 (n = 1e5, 5 seeds)"};
  const double t0 = detail::now();
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const Word w = make_random(seed, 100000);
    const double n = 100000.0;
    const double s = to_double(sigma(w));
    const double r2 = s / (n * n);
    const double r3 = s / (n * n * n);
    r.add("seed " + std::to_string(seed) + " sigma/n^2", "in [1.45, 1.55]", detail::fmt(r2),
          r2 >= 1.45 && r2 <= 1.55);
    r.add("seed " + std::to_string(seed) + " sigma/n^3", "<= 0.001", detail::fmt(r3), r3 <= 1e-3);
    const Verdict v = classify(w);
    r.add("seed " + std::to_string(seed) + " classifier", "not-eventually-periodic",
          to_string(v.label), v.label == PeriodicityLabel::not_eventually_periodic);
  }
  r.seconds = detail::now() - t0;
  return r;
}

// 7. second-difference residuals lie in [0, 2k^4 + 3k) for every prime eta
//    with k <= 5, 20 admissible omegas each, ell in 2..40; includes the
//    pinned residual 3 for omega = "1", eta = "0", ell = 2.
inline CriterionResult criterion_lemma4_residuals() {
  CriterionResult r{7, "lemma4-residuals", "second-difference residuals in [0, 2k^4+3k)"};
  const double t0 = detail::now();

  const auto pinned = second_difference_residuals(Word::from_string("1"), Word::from_string("0"), {2});
  r.add("pinned case omega=1 eta=0 ell=2", "residual 3", std::to_string(pinned[0]),
        pinned[0] == 3);

  std::vector<std::int64_t> ells;
  for (std::int64_t l = 2; l <= 40; ++l) ells.push_back(l);
  std::mt19937_64 rng(1007);
  std::int64_t violations = 0, cases = 0, primes = 0;
  for (int len = 1; len <= 5; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word eta = detail::word_from_bits(bits, len);
      if (!is_prime_word(eta)) continue;
      ++primes;
      const std::int64_t k = len;
      const std::int64_t limit = 2 * k * k * k * k + 3 * k;
      Word eta2 = eta;
      eta2.append(eta);
      for (int t = 0; t < 20; ++t) {
        // admissible omega: ends with the complement of eta's last symbol,
        // and eta^2 occurs exactly once in omega eta^2. Uniqueness at
        // ell = 2 forces uniqueness at every larger exponent, and the
        // residual routine re-verifies each ell anyway.
        Word omega;
        for (int attempt = 0; attempt < 200 && omega.empty(); ++attempt) {
          Word cand = detail::random_word(rng, 3 + static_cast<std::int64_t>(rng() % 22));
          if (cand[cand.size() - 1] == eta[eta.size() - 1]) continue;
          Word probe = cand;
          probe.append(eta2);
          if (factor_count(probe, eta2) != 1) continue;
          omega = cand;
        }
        if (omega.empty()) {
          // constant complement word is always admissible; vary the length
          for (int j = 0; j < 3 + (t % 20); ++j) omega.push_back(1 - eta[eta.size() - 1]);
        }
        const auto residuals = second_difference_residuals(omega, eta, ells);
        for (std::int64_t v : residuals) {
          ++cases;
          if (v < 0 || v >= limit) ++violations;
        }
      }
    }
  }
  r.add("prime eta count (k <= 5)", "52", std::to_string(primes), primes == 52);
  r.add("residual range over " + std::to_string(cases) + " cases", "0 violations",
        std::to_string(violations) + " violations", violations == 0);
  r.seconds = detail::now() - t0;
  return r;
}

// 8. sparse words have a positive but oscillating sigma/n^3 level: word
//    0^1 1 0^2 1 0^4 1 ... of length 2^17, checkpoints in [2^13, 2^17].
//    Oscillation threshold frozen at 1.25 after confirming the magnitude
//    against sigma_naive at n <= 2^12 (measured 1.2969 there and 1.2868 at
//    full scale; see the acceptance notes in the README).
inline CriterionResult criterion_sparse_oscillation() {
  CriterionResult r{8, "sparse-oscillation", "sparse word: positive oscillating sigma/n^3 level"};
  const double t0 = detail::now();
  const Word w = make_sparse(1, Rational{2, 1}, 1 << 17);
  std::vector<std::int64_t> window;
  for (std::int64_t c : geometric_checkpoints(1 << 17))
    if (c >= (1 << 13)) window.push_back(c);
  const Profile prof = sigma_profile(w, window);
  double mn = 1e300, mx = 0;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double n = static_cast<double>(window[i]);
    const double ratio = to_double(prof.values[i]) / (n * n * n);
    mn = std::min(mn, ratio);
    mx = std::max(mx, ratio);
  }
  r.add("tail min over [2^13, 2^17]", "> 0", detail::fmt(mn), mn > 0.0);
  r.add("oscillation max/min", ">= 1.25", detail::fmt(mx / mn), mx / mn >= 1.25);
  r.seconds = detail::now() - t0;
  return r;
}

// 9. classifier battery: periodic words recover their period exactly; random,
//    sparse and Fibonacci words are all rejected; no inconclusive verdicts.
inline CriterionResult criterion_classifier_battery() {
  CriterionResult r{9, "classifier-battery", "classifier battery (20 periodic + 16 aperiodic)"};
  const double t0 = detail::now();
  const auto& entries = detail::battery();
  const auto& verdicts = detail::battery_verdicts();
  std::int64_t periodic_wrong = 0, aperiodic_wrong = 0, inconclusive = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Verdict& v = verdicts[i];
    if (v.label == PeriodicityLabel::inconclusive) ++inconclusive;
    if (entries[i].expect_periodic) {
      if (!(v.label == PeriodicityLabel::eventually_periodic && v.estimated_period &&
            *v.estimated_period == entries[i].expect_period))
        ++periodic_wrong;
    } else {
      if (v.label != PeriodicityLabel::not_eventually_periodic) ++aperiodic_wrong;
    }
  }
  r.add("20 periodic words labeled with correct period", "20 correct",
        std::to_string(20 - periodic_wrong) + " correct", periodic_wrong == 0);
  r.add("16 aperiodic words rejected", "16 correct",
        std::to_string(16 - aperiodic_wrong) + " correct", aperiodic_wrong == 0);
  r.add("inconclusive verdicts", "0", std::to_string(inconclusive), inconclusive == 0);
  r.seconds = detail::now() - t0;
  return r;
}

// 10. the factor-complexity criterion agrees with the classifier on the
//     whole battery.
inline CriterionResult criterion_morse_hedlund() {
  CriterionResult r{10, "morse-hedlund", "factor-complexity cross-check agrees on the battery"};
  const double t0 = detail::now();
  const auto& entries = detail::battery();
  const auto& verdicts = detail::battery_verdicts();
  std::int64_t disagreements = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool classified_periodic =
        verdicts[i].label == PeriodicityLabel::eventually_periodic;
    const bool mh_periodic = verdicts[i].evidence.morse_hedlund_k.has_value();
    if (classified_periodic != mh_periodic) ++disagreements;
  }
  r.add("agreement over " + std::to_string(entries.size()) + " battery words", "0 disagreements",
        std::to_string(disagreements) + " disagreements", disagreements == 0);
  r.seconds = detail::now() - t0;
  return r;
}

// 11. performance targets (warnings, not failures): sigma at n = 1e6 within
//     2 s, geometric profile at n = 1e5 within 60 s, lambda at n = 1e6
//     within 5 s.
inline CriterionResult criterion_performance() {
  CriterionResult r{11, "performance", "desk-scale timing targets (warn only)"};
  r.warn_only = true;
  const double t0 = detail::now();
  const Word w6 = make_random(1, 1000000);

  double t = detail::now();
  const BigCount s = sigma(w6);
  const double sigma_s = detail::now() - t;
  r.add("sigma at n = 1e6 (= " + to_string(s) + ")", "<= 2 s", detail::fmt(sigma_s) + " s",
        sigma_s <= 2.0);

  const Word w5 = make_random(2, 100000);
  t = detail::now();
  const Profile prof = sigma_profile(w5, geometric_checkpoints(100000));
  const double prof_s = detail::now() - t;
  r.add("geometric sigma profile at n = 1e5 (" + std::to_string(prof.size()) + " checkpoints)",
        "<= 60 s", detail::fmt(prof_s) + " s", prof_s <= 60.0);

  t = detail::now();
  const BigCount l = lambda(w6);
  const double lambda_s = detail::now() - t;
  r.add("lambda at n = 1e6 (= " + to_string(l) + ")", "<= 5 s", detail::fmt(lambda_s) + " s",
        lambda_s <= 5.0);
  r.seconds = detail::now() - t0;
  return r;
}

inline std::vector<CriterionResult> run_all(const std::string& only_filter = "") {
  std::vector<CriterionResult> results;
  auto want = [&](const char* key) {
    return only_filter.empty() || std::string(key).find(only_filter) != std::string::npos;
  };
  if (want("sigma-oracle")) results.push_back(criterion_sigma_oracle());
  if (want("lambda-oracle")) results.push_back(criterion_lambda_oracle());
  if (want("lemma1")) results.push_back(criterion_lemma1());
  if (want("sigma-max")) results.push_back(criterion_sigma_max());
  if (want("theorem1")) results.push_back(criterion_theorem1());
  if (want("random-limit")) results.push_back(criterion_random_limit());
  if (want("lemma4-residuals")) results.push_back(criterion_lemma4_residuals());
  if (want("sparse-oscillation")) results.push_back(criterion_sparse_oscillation());
  if (want("classifier-battery")) results.push_back(criterion_classifier_battery());
  if (want("morse-hedlund")) results.push_back(criterion_morse_hedlund());
  if (want("performance")) results.push_back(criterion_performance());
  return results;
}

} // namespace wordstat::reproduce
