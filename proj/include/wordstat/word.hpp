#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordstat {

/// Thrown when word text contains a byte other than '0', '1' or whitespace.
/// `offset` is the 0-based byte position of the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, int byte)
      : std::runtime_error("invalid byte 0x" + hex(byte) + " at offset " +
                           std::to_string(offset) +
                           " (expected '0', '1' or whitespace)"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  static std::string hex(int b) {
    static const char digits[] = "0123456789abcdef";
    return {digits[(b >> 4) & 0xf], digits[b & 0xf]};
  }
  std::size_t offset_;
};

/// Finite binary word, one byte per symbol (values 0 and 1). Immutable by
/// convention once built: all library operations take words by const
/// reference and return fresh values, so sharing across threads is safe.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_)
      if (b > 1) throw std::invalid_argument("Word: symbol out of {0,1}");
  }

  /// Strict literal parser: accepts only '0' and '1'.
  static Word from_string(std::string_view s) {
    Word w;
    w.bits_.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("Word::from_string: expected '0' or '1'");
      w.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  void push_back(std::uint8_t b) {
    if (b > 1) throw std::invalid_argument("Word: symbol out of {0,1}");
    bits_.push_back(b);
  }
  void reserve(std::size_t n) { bits_.reserve(n); }

  void append(const Word& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }

  Word prefix(std::size_t n) const {
    if (n > size()) throw std::invalid_argument("Word::prefix: n exceeds length");
    return Word(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
  }

  Word subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || pos + len > size())
      throw std::invalid_argument("Word::subword: range out of bounds");
    return Word(std::vector<std::uint8_t>(bits_.begin() + pos,
                                          bits_.begin() + pos + len));
  }

  Word reversed() const {
    return Word(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
  }

  Word complemented() const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = 1 - bits_[i];
    return Word(std::move(out));
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = char('0' + bits_[i]);
    return s;
  }

  const std::vector<std::uint8_t>& data() const { return bits_; }
  std::span<const std::uint8_t> span() const { return {bits_.data(), bits_.size()}; }

  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Word file content: ASCII '0'/'1', whitespace ignored, anything else is a
/// ParseError naming the byte offset.
inline Word parse_word_text(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '0' || c == '1') {
      w.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (std::isspace(c)) {
      continue;
    } else {
      throw ParseError(i, c);
    }
  }
  return w;
}

inline Word read_word_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open word file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_word_text(text);
}

inline void write_word_file(const std::string& path, const Word& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  const std::string s = w.to_string();
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  out.put('\n');
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace wordstat
