#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wordstat/word.hpp"

namespace wordstat {

/// Exact rational, used for the sparse generator's growth ratio.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool greater_than_one() const { return den >= 1 && num > den; }
};

/// Accepts "3", "3/2" and decimal forms like "1.5" (at most 9 fraction digits).
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational: '" + std::string(s) + "'");
  };
  if (s.empty()) fail();
  auto parse_int = [&](std::string_view t) -> std::int64_t {
    if (t.empty() || t.size() > 18) fail();
    std::int64_t v = 0;
    for (char c : t) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational r{parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1))};
    if (r.den == 0) fail();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.size() > 9) fail();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    return Rational{parse_int(ip) * den + (fp.empty() ? 0 : parse_int(fp)), den};
  }
  return Rational{parse_int(s), 1};
}

/// Length-n prefix of zeta eta^inf.
inline Word make_periodic(const Word& eta, const Word& zeta, std::int64_t n) {
  if (eta.empty()) throw std::invalid_argument("make_periodic: empty eta");
  if (n < 0) throw std::invalid_argument("make_periodic: negative length");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n && i < static_cast<std::int64_t>(zeta.size()); ++i)
    out.push_back(zeta[static_cast<std::size_t>(i)]);
  const std::int64_t h = static_cast<std::int64_t>(zeta.size());
  const std::int64_t k = static_cast<std::int64_t>(eta.size());
  for (std::int64_t i = h; i < n; ++i)
    out.push_back(eta[static_cast<std::size_t>((i - h) % k)]);
  return Word(std::move(out));
}

/// Length-n prefix of 0^{k1} 1 0^{k2} 1 ... with k_{i+1} = ceil(ratio * k_i).
/// The block lengths grow at least geometrically, which is what keeps the
/// normalized complexity level positive while destroying its limit.
inline Word make_sparse(std::int64_t k1, Rational ratio, std::int64_t n) {
  if (k1 < 1) throw std::invalid_argument("make_sparse: k1 must be >= 1");
  if (!ratio.greater_than_one())
    throw std::invalid_argument("make_sparse: ratio must be > 1");
  if (n < 0) throw std::invalid_argument("make_sparse: negative length");
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  std::int64_t k = k1;
  while (static_cast<std::int64_t>(out.size()) < n) {
    for (std::int64_t i = 0; i < k && static_cast<std::int64_t>(out.size()) < n; ++i)
      out.push_back(0);
    if (static_cast<std::int64_t>(out.size()) < n) out.push_back(1);
    k = (ratio.num * k + ratio.den - 1) / ratio.den;  // ceil(num*k/den)
  }
  return Word(std::move(out));
}

/// Deterministic i.i.d.-uniform bits: symbol i is bit (i mod 64) of the
/// (i/64)-th draw of a mt19937_64 seeded with `seed`. Prefix-consistent by
/// construction; the seed-to-word map is frozen by regression fixtures.
inline Word make_random(std::uint64_t seed, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("make_random: negative length");
  std::mt19937_64 eng(seed);
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n));
  std::uint64_t block = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if ((i & 63) == 0) block = eng();
    out.push_back(static_cast<std::uint8_t>((block >> (i & 63)) & 1));
  }
  return Word(std::move(out));
}

/// Length-n prefix of the fixed point of 0 -> 01, 1 -> 0. Auxiliary control
/// family: aperiodic, non-random, with factor complexity k+1.
inline Word make_fibonacci(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("make_fibonacci: negative length");
  std::vector<std::uint8_t> cur{0};
  while (static_cast<std::int64_t>(cur.size()) < n) {
    std::vector<std::uint8_t> next;
    next.reserve(cur.size() * 2);
    for (std::uint8_t b : cur) {
      if (b == 0) {
        next.push_back(0);
        next.push_back(1);
      } else {
        next.push_back(0);
      }
    }
    cur = std::move(next);
  }
  cur.resize(static_cast<std::size_t>(n));
  return Word(std::move(cur));
}

enum class GeneratorKind { periodic, sparse, random_iid, fibonacci, file };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_iid;
  Word eta;                 // periodic
  Word zeta;                // periodic, may be empty
  std::int64_t k1 = 1;      // sparse
  Rational ratio{2, 1};     // sparse
  std::uint64_t seed = 1;   // random
  std::string path;         // file
  std::int64_t length = 0;  // target length for all kinds
};

inline Word make_word(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::periodic:
      return make_periodic(spec.eta, spec.zeta, spec.length);
    case GeneratorKind::sparse:
      return make_sparse(spec.k1, spec.ratio, spec.length);
    case GeneratorKind::random_iid:
      return make_random(spec.seed, spec.length);
    case GeneratorKind::fibonacci:
      return make_fibonacci(spec.length);
    case GeneratorKind::file: {
      Word w = read_word_file(spec.path);
      if (spec.length > 0 && static_cast<std::int64_t>(w.size()) > spec.length)
        w = w.prefix(static_cast<std::size_t>(spec.length));
      return w;
    }
  }
  throw std::logic_error("make_word: unknown kind");
}

inline std::string describe(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::periodic:
      return "kind=periodic eta=" + spec.eta.to_string() +
             " zeta=" + spec.zeta.to_string();
    case GeneratorKind::sparse:
      return "kind=sparse k1=" + std::to_string(spec.k1) + " ratio=" +
             std::to_string(spec.ratio.num) + "/" + std::to_string(spec.ratio.den);
    case GeneratorKind::random_iid:
      return "kind=random seed=" + std::to_string(spec.seed);
    case GeneratorKind::fibonacci:
      return "kind=fibonacci";
    case GeneratorKind::file:
      return "kind=file path=" + spec.path;
  }
  return "kind=?";
}

} // namespace wordstat
