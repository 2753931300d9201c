#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "wordstat/bigcount.hpp"
#include "wordstat/csv.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/lambda.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/svg.hpp"

using namespace wordstat;

static Word W(std::string_view s) { return Word::from_string(s); }

TEST_CASE("bigcount decimal formatting") {
  CHECK(to_string(static_cast<BigCount>(0)) == "0");
  CHECK(to_string(static_cast<BigCount>(333833500)) == "333833500");
  // 2^100
  BigCount big = 1;
  for (int i = 0; i < 100; ++i) big *= 2;
  CHECK(to_string(big) == "1267650600228229401496703205376");
  CHECK(fits_uint64(static_cast<BigCount>(UINT64_MAX)));
  CHECK_FALSE(fits_uint64(big));
}

TEST_CASE("sigma profile csv header and rows") {
  const Word w = make_periodic(W("0"), W(""), 3);
  const std::string csv = sigma_profile_csv(sigma_profile(w, {1, 2, 3}));
  const std::string expected_header = "n,sigma,sigma_over_n2,sigma_over_n3\n";
  REQUIRE(csv.substr(0, expected_header.size()) == expected_header);
  CHECK(csv.find("\n1,1,1,1\n") != std::string::npos);
  CHECK(csv.find("\n2,5,1.25,0.625\n") != std::string::npos);
  CHECK(csv.find("\n3,14,") != std::string::npos);
}

TEST_CASE("lambda profile csv header and witness columns") {
  const std::string csv = lambda_profile_csv(lambda_profile(W("00000"), {4, 5}));
  const std::string expected_header =
      "n,lambda,lambda_over_n3,witness_eta_len,witness_exponent,witness_pos\n";
  REQUIRE(csv.substr(0, expected_header.size()) == expected_header);
  CHECK(csv.find("\n4,128,2,4,1,1\n") != std::string::npos);
  CHECK(csv.find("\n5,216,1.728,1,5,1\n") != std::string::npos);
}

TEST_CASE("csv floats preserve at least 12 significant digits") {
  const Word w = make_random(1, 999);
  const Profile prof = sigma_profile(w, {999});
  const std::string csv = sigma_profile_csv(prof);
  const auto line_start = csv.find("\n999,");
  REQUIRE(line_start != std::string::npos);
  const std::string row = csv.substr(line_start + 1);
  const auto c1 = row.find(','), c2 = row.find(',', c1 + 1), c3 = row.find(',', c2 + 1);
  const double printed2 = std::stod(row.substr(c2 + 1, c3 - c2 - 1));
  const double printed3 = std::stod(row.substr(c3 + 1));
  const double exact2 = to_double(prof.values[0]) / (999.0 * 999.0);
  const double exact3 = to_double(prof.values[0]) / (999.0 * 999.0 * 999.0);
  CHECK(std::fabs(printed2 - exact2) <= 1e-12 * exact2);
  CHECK(std::fabs(printed3 - exact3) <= 1e-12 * exact3);
}

TEST_CASE("svg chart is well formed with one polyline per series") {
  const Word w = make_random(9, 2000);
  const Profile prof = sigma_profile(w, geometric_checkpoints(2000));
  std::vector<RatioSeries> series{ratio_series(prof, 2), ratio_series(prof, 3)};
  const std::string svg = svg_chart(series, {"sigma/n^2", "sigma/n^3"}, "profile");

  REQUIRE(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

  std::size_t polylines = 0, pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    ++polylines;
    pos += 9;
  }
  CHECK(polylines == series.size());

  // crude well-formedness: every '<' has a matching '>' before the next '<'
  std::int64_t depth = 0;
  for (char c : svg) {
    if (c == '<') {
      REQUIRE(depth == 0);
      depth = 1;
    } else if (c == '>') {
      REQUIRE(depth == 1);
      depth = 0;
    }
  }
  CHECK(depth == 0);

  // determinism
  CHECK(svg == svg_chart(series, {"sigma/n^2", "sigma/n^3"}, "profile"));
}
