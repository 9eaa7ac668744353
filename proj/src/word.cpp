#include "shiftmax/word.hpp"

#include "shiftmax/rational.hpp"

namespace shiftmax {

Word::Word(std::uint64_t bits, unsigned length) : bits_(bits), length_(length) {
  if (length > kMaxLength) throw Error("word longer than " + std::to_string(kMaxLength));
  if (length < 64 && (bits >> length) != 0) throw Error("word bits exceed its length");
}

Word Word::parse(std::string_view text) {
  if (text.size() > kMaxLength) throw Error("word longer than " + std::to_string(kMaxLength));
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error("word \"" + std::string(text) + "\" is not binary");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Word(bits, static_cast<unsigned>(text.size()));
}

int Word::at(unsigned i) const {
  if (i >= length_) throw Error("insufficient depth");
  return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1U);
}

Word Word::prefix(unsigned k) const {
  if (k > length_) throw Error("insufficient depth");
  return Word(k == 0 ? 0 : bits_ >> (length_ - k), k);
}

Word Word::suffix_from(unsigned i) const {
  if (i > length_) throw Error("insufficient depth");
  unsigned len = length_ - i;
  std::uint64_t mask = len == 0 ? 0 : (len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1);
  return Word(bits_ & mask, len);
}

Word Word::append(int symbol) const {
  return Word((bits_ << 1) | static_cast<std::uint64_t>(symbol & 1), length_ + 1);
}

std::string Word::str() const {
  std::string s(length_, '0');
  for (unsigned i = 0; i < length_; ++i) s[i] = static_cast<char>('0' + at(i));
  return s;
}

}  // namespace shiftmax
