#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/sigma.hpp"
#include "wordstat/suffix_automaton.hpp"

using namespace wordstat;

static Word W(std::string_view s) { return Word::from_string(s); }

static BigCount constant_word_sigma(std::int64_t n) {
  // sum of squares 1^2 + ... + n^2
  return static_cast<BigCount>(static_cast<std::uint64_t>(n)) * (n + 1) * (2 * n + 1) / 6;
}

TEST_CASE("factor_count") {
  CHECK(factor_count(W("0101"), W("01")) == 2);
  CHECK(factor_count(W("000"), W("0")) == 3);
  CHECK(factor_count(W("0101"), W("11")) == 0);
  CHECK(factor_count(W("01"), W("0101")) == 0);
  CHECK_THROWS_AS(factor_count(W("01"), W("")), std::invalid_argument);
}

TEST_CASE("suffix_window_count") {
  CHECK(suffix_window_count(W("0101"), W("01"), 2) == 1);
  CHECK(suffix_window_count(W("0101"), W("01"), 4) == 2);
  CHECK(suffix_window_count(W("000"), W("0"), 1) == 1);
  CHECK_THROWS_AS(suffix_window_count(W("000"), W("0"), 0), std::invalid_argument);
  CHECK_THROWS_AS(suffix_window_count(W("000"), W("0"), 4), std::invalid_argument);
}

TEST_CASE("sigma_naive frozen examples") {
  CHECK(sigma_naive(W("")) == 0);
  CHECK(sigma_naive(W("0")) == 1);
  CHECK(sigma_naive(W("01")) == 3);
  CHECK(sigma_naive(W("0101")) == 16);
  CHECK(sigma_naive(W("0000")) == 30);
  CHECK(sigma_naive(W("000")) == 14);
  CHECK(sigma_naive(W("010")) == 8);
}

TEST_CASE("sigma fast path examples") {
  CHECK(sigma(W("")) == 0);
  CHECK(sigma(W("0101")) == 16);
  CHECK(sigma(make_periodic(W("0"), W(""), 1000)) == 333833500);
  CHECK(sigma(make_periodic(W("0"), W(""), 1000)) == constant_word_sigma(1000));
}

TEST_CASE("sigma equals sigma_naive exhaustively to length 10") {
  for (int len = 1; len <= 10; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = oracles::word_from_bits(bits, len);
      REQUIRE(sigma(w) == sigma_naive(w));
    }
}

TEST_CASE("sigma equals sigma_naive on random words") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 200);
    const Word w = make_random(rng(), len);
    REQUIRE(sigma(w) == sigma_naive(w));
  }
}

TEST_CASE("sigma invariances and bound") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t len = 1 + static_cast<std::int64_t>(rng() % 300);
    const Word w = make_random(rng(), len);
    const BigCount s = sigma(w);
    CHECK(sigma(w.reversed()) == s);
    CHECK(sigma(w.complemented()) == s);
    CHECK(s <= constant_word_sigma(len));
  }
}

TEST_CASE("sigma upper bound equality only for constant words (short lengths)") {
  for (int len = 1; len <= 12; ++len) {
    const BigCount bound = constant_word_sigma(len);
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = oracles::word_from_bits(bits, len);
      const bool constant = (bits == 0) || (bits == (1u << len) - 1);
      if (constant)
        REQUIRE(sigma(w) == bound);
      else
        REQUIRE(sigma(w) < bound);
    }
  }
}

TEST_CASE("suffix_occurrence_sum") {
  CHECK(suffix_occurrence_sum(W("000")) == 6);
  CHECK(suffix_occurrence_sum(W("01")) == 2);
  CHECK(suffix_occurrence_sum(W("0101")) == 6);
  CHECK_THROWS_AS(suffix_occurrence_sum(W("")), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = make_random(rng(), 1 + static_cast<std::int64_t>(rng() % 120));
    REQUIRE(suffix_occurrence_sum(w) ==
            static_cast<BigCount>(static_cast<std::uint64_t>(oracles::naive_suffix_occurrence_sum(w))));
  }
}

TEST_CASE("one-step recurrence: sigma(n) - sigma(n-1) = 2 S(n) - n") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t len = 2 + static_cast<std::int64_t>(rng() % 80);
    const Word w = make_random(rng(), len);
    BigCount prev = sigma(w.prefix(1));
    for (std::int64_t n = 2; n <= len; ++n) {
      const Word pre = w.prefix(static_cast<std::size_t>(n));
      const BigCount cur = sigma(pre);
      REQUIRE(cur > prev);  // strict monotonicity over prefixes
      REQUIRE(cur - prev == 2 * suffix_occurrence_sum(pre) - static_cast<BigCount>(static_cast<std::uint64_t>(n)));
      prev = cur;
    }
  }
}

TEST_CASE("increment identity holds") {
  CHECK(sigma_increment_identity_check(W("0"), W("1")));
  CHECK(sigma_increment_identity_check(W("01"), W("01")));
  CHECK(sigma_increment_identity_check(W("100"), W("0")));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Word omega = make_random(rng(), 1 + static_cast<std::int64_t>(rng() % 24));
    const Word eta = make_random(rng(), 1 + static_cast<std::int64_t>(rng() % 12));
    REQUIRE(sigma_increment_identity_check(omega, eta));
  }
}

TEST_CASE("suffix automaton size bounds") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t len = 3 + static_cast<std::int64_t>(rng() % 400);
    const SuffixAutomaton sa(make_random(rng(), len));
    CHECK(sa.state_count() <= 2 * len - 1);
    CHECK(sa.transition_count() <= 3 * len - 4);
    // suffix links strictly decrease max length
    for (std::int64_t v = 1; v < sa.state_count(); ++v)
      REQUIRE(sa.state(sa.state(v).link).len < sa.state(v).len);
  }
}

TEST_CASE("automaton occurrence counts match direct counting") {
  // For every factor read off a state, the state's count is its occurrence
  // count; verified against the scanning counter on small random words.
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Word w = make_random(rng(), 12 + static_cast<std::int64_t>(rng() % 20));
    const SuffixAutomaton sa(w);
    const auto counts = sa.occurrence_counts();
    // Walk every factor of w through the automaton.
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::int64_t state = 0;
      for (std::size_t j = i; j < w.size(); ++j) {
        state = sa.state(state).next[w[j]];
        REQUIRE(state != -1);
        const Word factor = w.subword(i, j - i + 1);
        REQUIRE(counts[static_cast<std::size_t>(state)] == factor_count(w, factor));
      }
    }
  }
}
