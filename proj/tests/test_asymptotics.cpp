#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wordstat/classifier.hpp"
#include "wordstat/complexity.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/ratios.hpp"
#include "wordstat/sigma.hpp"

using namespace wordstat;

static Word W(std::string_view s) { return Word::from_string(s); }

// Unit-scale classifier config: same thresholds, shorter words.
static ClassifierConfig small_config() {
  ClassifierConfig cfg;
  cfg.min_length = 2048;
  return cfg;
}

TEST_CASE("ratio_series") {
  const Word zeros = make_periodic(W("0"), W(""), 1000);
  const Profile prof = sigma_profile(zeros, geometric_checkpoints(1000));
  const RatioSeries r3 = ratio_series(prof, 3);
  CHECK_THAT(r3.ratios.back(), Catch::Matchers::WithinAbs(0.33383, 1e-5));

  Profile tiny;
  tiny.checkpoints = {1};
  tiny.values = {1};
  CHECK(ratio_series(tiny, 2).ratios[0] == 1.0);

  CHECK_THROWS_AS(ratio_series(prof, 4), std::invalid_argument);
  CHECK_THROWS_AS(ratio_series(Profile{}, 3), std::invalid_argument);

  // sigma/n^3 never exceeds (n+1)(2n+1)/(6 n^2)
  for (std::size_t i = 0; i < r3.ratios.size(); ++i) {
    const double n = static_cast<double>(r3.checkpoints[i]);
    REQUIRE(r3.ratios[i] <= (n + 1) * (2 * n + 1) / (6 * n * n) + 1e-12);
  }
}

TEST_CASE("lambda ratio floor") {
  const Word w = make_random(11, 500);
  const double n = 500;
  const double r3 = to_double(lambda(w)) / (n * n * n);
  CHECK(r3 >= 8.0 / n);
}

TEST_CASE("tail_oscillation") {
  RatioSeries s;
  s.checkpoints = {10, 20, 30, 40};
  s.ratios = {0.5, 0.5, 0.5, 0.5};
  s.exponent = 3;
  const TailStats t1 = tail_oscillation(s, 1.0);
  CHECK(t1.min == 0.5);
  CHECK(t1.max == 0.5);
  CHECK(t1.osc == 1.0);

  s.ratios = {1, 2, 1, 2};
  const TailStats t2 = tail_oscillation(s, 1.0);
  CHECK(t2.min == 1.0);
  CHECK(t2.max == 2.0);
  CHECK(t2.osc == 2.0);

  CHECK_THROWS_AS(tail_oscillation(s, 0.1), std::invalid_argument);  // < 4 tail points
  CHECK_THROWS_AS(tail_oscillation(s, 0.0), std::invalid_argument);

  s.ratios = {0.0, 1.0, 1.0, 1.0};
  CHECK(std::isinf(tail_oscillation(s, 1.0).osc));
}

TEST_CASE("factor_complexity") {
  CHECK(factor_complexity(W("0101"), 2) == 2);
  CHECK(factor_complexity(W("0101"), 1) == 2);
  CHECK(factor_complexity(make_random(21, 10000), 3) == 8);
  CHECK_THROWS_AS(factor_complexity(W("0101"), 0), std::invalid_argument);
  CHECK_THROWS_AS(factor_complexity(W("0101"), 5), std::invalid_argument);

  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 20; ++trial) {
    const Word w = make_random(rng(), 5 + static_cast<std::int64_t>(rng() % 60));
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(w.size()); ++k)
      REQUIRE(factor_complexity(w, k) == oracles::naive_factor_complexity(w, k));
  }
}

TEST_CASE("morse_hedlund_check") {
  CHECK(morse_hedlund_check(make_periodic(W("01"), W(""), 1000), 8) == 2);
  CHECK_FALSE(morse_hedlund_check(make_random(6, 10000), 8).has_value());
  CHECK(morse_hedlund_check(W("0000"), 1) == 1);
  // Fibonacci words have complexity k+1: no k ever qualifies.
  CHECK_FALSE(morse_hedlund_check(make_fibonacci(5000), 32).has_value());
  for (std::int64_t k = 1; k <= 32; ++k)
    REQUIRE(factor_complexity(make_fibonacci(5000), k) == k + 1);
}

TEST_CASE("classify: periodic word") {
  const Word w = make_periodic(W("01"), W("111"), 50000);
  const Verdict v = classify(w);
  CHECK(v.label == PeriodicityLabel::eventually_periodic);
  REQUIRE(v.estimated_period.has_value());
  CHECK(*v.estimated_period == 2);
  CHECK_THAT(v.estimated_limit, Catch::Matchers::WithinRel(1.0 / 6.0, 0.05));
  CHECK(*v.estimated_period ==
        static_cast<std::int64_t>(std::llround(1.0 / (3.0 * v.estimated_limit))));
  CHECK(v.evidence.morse_hedlund_k.has_value());
  CHECK(v.evidence.oscillation <= 1.05);
}

TEST_CASE("classify: random word") {
  const Verdict v = classify(make_random(14, 20000), small_config());
  CHECK(v.label == PeriodicityLabel::not_eventually_periodic);
  CHECK_FALSE(v.estimated_period.has_value());
  CHECK(v.estimated_limit < 1.0 / 192.0);
}

TEST_CASE("classify: sparse word oscillates") {
  const Verdict v = classify(make_sparse(1, Rational{2, 1}, 100000));
  CHECK(v.label == PeriodicityLabel::not_eventually_periodic);
  CHECK(v.estimated_limit > 0.01);   // positive level...
  CHECK(v.evidence.oscillation > 1.05);  // ...but no limit
}

TEST_CASE("classify: errors and config echo") {
  CHECK_THROWS_AS(classify(make_random(1, 100)), std::invalid_argument);
  const Verdict v = classify(make_random(2, 4096), small_config());
  CHECK(v.config.min_length == 2048);
  CHECK(v.config.k_max == 64);
}

TEST_CASE("period_tail_start") {
  // 111 then (01)...: the last prefix symbol extends the period-2 tail by one
  const Word w = make_periodic(W("01"), W("111"), 40);
  CHECK(period_tail_start(w, 2) == 2);
  CHECK(period_tail_start(make_periodic(W("01"), W("00"), 40), 2) == 2);
  CHECK(period_tail_start(make_periodic(W("01"), W("11"), 40), 2) == 1);
  CHECK(period_tail_start(make_periodic(W("0"), W(""), 10), 1) == 0);
  CHECK(period_tail_start(W("0101"), 7) == 0);
  CHECK_THROWS_AS(period_tail_start(W("0101"), 0), std::invalid_argument);
}

TEST_CASE("verdict invariants across families") {
  std::vector<Verdict> verdicts;
  verdicts.push_back(classify(make_periodic(W("011"), W("10"), 20000), small_config()));
  verdicts.push_back(classify(make_random(77, 20000), small_config()));
  verdicts.push_back(classify(make_fibonacci(20000), small_config()));
  verdicts.push_back(classify(make_sparse(1, Rational{2, 1}, 20000), small_config()));
  for (const Verdict& v : verdicts) {
    CHECK(v.estimated_period.has_value() ==
          (v.label == PeriodicityLabel::eventually_periodic));
    if (v.estimated_period) {
      CHECK(*v.estimated_period ==
            static_cast<std::int64_t>(std::llround(1.0 / (3.0 * v.estimated_limit))));
    }
    // cross-check agreement: never a silent disagreement with factor complexity
    const bool mh = v.evidence.morse_hedlund_k.has_value();
    if (v.label == PeriodicityLabel::eventually_periodic) CHECK(mh);
    if (v.label == PeriodicityLabel::not_eventually_periodic) CHECK_FALSE(mh);
  }
  CHECK(verdicts[0].label == PeriodicityLabel::eventually_periodic);
  CHECK(verdicts[0].estimated_period == 3);
  CHECK(verdicts[1].label == PeriodicityLabel::not_eventually_periodic);
  CHECK(verdicts[2].label == PeriodicityLabel::not_eventually_periodic);
  CHECK(verdicts[3].label == PeriodicityLabel::not_eventually_periodic);
}

TEST_CASE("cross-engine: 48 sigma >= lambda at every checkpoint, co-positive tails") {
  const Word w = make_periodic(W("011"), W("1"), 20000);
  const auto cps = geometric_checkpoints(20000);
  const Profile sp = sigma_profile(w, cps);
  const LambdaProfile lp = lambda_profile(w, cps);
  for (std::size_t i = 0; i < cps.size(); ++i)
    REQUIRE(48 * sp.values[i] >= lp.profile.values[i]);
  const double sigma_level = tail_median(ratio_series(sp, 3), 0.25);
  const double lambda_level = tail_median(ratio_series(lp.profile, 3), 0.25);
  CHECK(sigma_level > 1.0 / 192.0);
  CHECK(lambda_level > 0.0);
}

TEST_CASE("dominant power evidence tracks the periodic structure") {
  const auto ev = dominant_power_evidence(make_periodic(W("011"), W(""), 3000), {1000, 3000});
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].eta_length == 3);
  CHECK(ev[0].exponent == 333);
  CHECK(ev[1].exponent == 1000);
}
