#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace shiftmax {

/// A finite binary word, the index of the cylinder [w] in {0,1}^N.
///
/// Bits are packed most-significant-first, so for a fixed length the integer
/// order of `bits()` is the lexicographic order of the words. Lengths up to 63
/// are supported, far beyond any level the library enumerates.
class Word {
 public:
  static constexpr unsigned kMaxLength = 63;

  constexpr Word() = default;
  Word(std::uint64_t bits, unsigned length);

  static Word parse(std::string_view text);

  constexpr unsigned length() const { return length_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return length_ == 0; }

  /// Symbol at position i (0-based from the left).
  int at(unsigned i) const;
  Word prefix(unsigned k) const;
  Word suffix_from(unsigned i) const;
  Word append(int symbol) const;

  std::string str() const;

  /// Shorter words first, then lexicographic. Used for map keys only.
  friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend constexpr bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t bits_ = 0;
  unsigned length_ = 0;
};

/// Number of words of length n, i.e. 2^n.
constexpr std::uint64_t word_count(unsigned n) { return std::uint64_t{1} << n; }

}  // namespace shiftmax
