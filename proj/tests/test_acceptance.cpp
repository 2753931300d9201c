// Acceptance suite: runs every reproduction criterion at its frozen
// tolerance and prints one pass/fail line per criterion. Timing targets
// (criterion 11) warn instead of failing.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "wordstat/reproduce.hpp"

using namespace wordstat;

TEST_CASE("acceptance criteria") {
  const auto results = reproduce::run_all();
  REQUIRE(results.size() == 11);

  bool all_pass = true;
  for (const auto& cr : results) {
    const char* status = cr.pass ? "PASS" : (cr.warn_only ? "WARN" : "FAIL");
    std::printf("[%s] criterion %2d %-20s %s (%.2f s)\n", status, cr.id, cr.key.c_str(),
                cr.title.c_str(), cr.seconds);
    for (const auto& row : cr.rows) {
      if (!row.ok)
        std::printf("       %s: expected %s, observed %s\n", row.name.c_str(),
                    row.expected.c_str(), row.observed.c_str());
    }
    if (!cr.pass && !cr.warn_only) all_pass = false;

    INFO("criterion " << cr.id << " (" << cr.key << ")");
    for (const auto& row : cr.rows) {
      INFO(row.name << ": expected " << row.expected << ", observed " << row.observed);
      if (cr.warn_only) {
        if (!row.ok)
          WARN("timing target missed: " << row.name << " observed " << row.observed);
      } else {
        CHECK(row.ok);
      }
    }
  }
  REQUIRE(all_pass);
}
