#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/runs.hpp"

using namespace wordstat;

static Word W(std::string_view s) { return Word::from_string(s); }

static std::vector<oracles::NaiveRun> as_naive(const std::vector<Run>& rs) {
  std::vector<oracles::NaiveRun> out;
  for (const Run& r : rs) out.push_back({r.start, r.end, r.period});
  return out;
}

TEST_CASE("runs examples") {
  CHECK(as_naive(runs(W("0101"))) == std::vector<oracles::NaiveRun>{{1, 4, 2}});
  CHECK(as_naive(runs(W("0011"))) == std::vector<oracles::NaiveRun>{{1, 2, 1}, {3, 4, 1}});
  CHECK(runs(W("010")).empty());  // length 3 < 2p for p = 2
  CHECK(runs(W("01")).empty());
  CHECK(runs(W("")).empty());
  CHECK(runs(W("0")).empty());
}

TEST_CASE("runs match the naive oracle exhaustively to length 14") {
  for (int len = 1; len <= 14; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      const Word w = oracles::word_from_bits(bits, len);
      REQUIRE(as_naive(runs(w)) == oracles::naive_runs(w));
    }
}

TEST_CASE("runs match the naive oracle on words up to length 40") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t len = 15 + static_cast<std::int64_t>(rng() % 26);
    const Word w = make_random(rng(), len);
    REQUIRE(as_naive(runs(w)) == oracles::naive_runs(w));
  }
  // Structured words stress the dedup/minimal-period path.
  for (const char* s : {"0000000000000000000000000000000000000000",
                        "0101010101010101010101010101010101010101",
                        "0110110110110110110110110110110110110110",
                        "0010010000100100001001000010010000100100"}) {
    const Word w = W(s);
    REQUIRE(as_naive(runs(w)) == oracles::naive_runs(w));
  }
  for (std::int64_t n : {33, 34, 35, 36, 37, 38, 39, 40}) {
    const Word p = make_periodic(W("01101"), W("10"), n);
    REQUIRE(as_naive(runs(p)) == oracles::naive_runs(p));
    const Word f = make_fibonacci(n);
    REQUIRE(as_naive(runs(f)) == oracles::naive_runs(f));
    const Word sp = make_sparse(1, Rational{2, 1}, n);
    REQUIRE(as_naive(runs(sp)) == oracles::naive_runs(sp));
  }
}

TEST_CASE("run fields are internally consistent on larger words") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    const Word w = make_random(rng(), 2000 + static_cast<std::int64_t>(rng() % 3000));
    const std::int64_t n = static_cast<std::int64_t>(w.size());
    for (const Run& r : runs(w)) {
      REQUIRE(r.start >= 1);
      REQUIRE(r.end <= n);
      REQUIRE(r.length() >= 2 * r.period);
      // claimed periodicity
      for (std::int64_t x = r.start - 1; x + r.period <= r.end - 1; ++x)
        REQUIRE(w[static_cast<std::size_t>(x)] == w[static_cast<std::size_t>(x + r.period)]);
      // maximality
      if (r.start >= 2)
        REQUIRE(w[static_cast<std::size_t>(r.start - 2)] !=
                w[static_cast<std::size_t>(r.start - 2 + r.period)]);
      if (r.end <= n - 1)
        REQUIRE(w[static_cast<std::size_t>(r.end)] !=
                w[static_cast<std::size_t>(r.end - r.period)]);
      // minimality of the period on the run factor
      const Word factor =
          w.subword(static_cast<std::size_t>(r.start - 1), static_cast<std::size_t>(r.length()));
      REQUIRE(oracles::naive_minimal_period(factor) == r.period);
    }
  }
}
