#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "error.hpp"

namespace splitoc {

inline constexpr int kMaxWordDegree = 31;

/// Ordered operator alphabet A < B (< C).
class Alphabet {
public:
  explicit Alphabet(int size) : size_(size) {
    if (size < 2 || size > 3)
      throw invalid_input("alphabet size must be 2 or 3, got " + std::to_string(size));
  }

  int size() const noexcept { return size_; }
  static char symbol(int letter) noexcept { return static_cast<char>('A' + letter); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  int size_;
};

/// Word over the operator alphabet, packed two bits per letter.
///
/// Letter i lives in bits [62 - 2i, 63 - 2i], so the packed value compared
/// as an unsigned integer, ties broken by length, is exactly lexicographic
/// order with a proper prefix sorting first. The empty word is the unit of
/// concatenation.
class Word {
public:
  Word() = default;

  static Word letter(int index) {
    Word w;
    w.push_back(index);
    return w;
  }

  static Word from_string(std::string_view text) {
    Word w;
    for (char ch : text) {
      if (ch < 'A' || ch > 'C')
        throw invalid_input("invalid letter '" + std::string(1, ch) + "' in word");
      w.push_back(ch - 'A');
    }
    return w;
  }

  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  int operator[](int i) const noexcept {
    return static_cast<int>((bits_ >> shift(i)) & 3u);
  }

  void push_back(int index) {
    if (index < 0 || index > 2)
      throw invalid_input("letter index out of range");
    if (size_ >= kMaxWordDegree)
      throw invalid_input("word degree exceeds " + std::to_string(kMaxWordDegree));
    bits_ |= static_cast<std::uint64_t>(index) << shift(size_);
    ++size_;
  }

  Word prefix(int n) const noexcept {
    Word w;
    w.size_ = static_cast<std::uint8_t>(n);
    w.bits_ = n == 0 ? 0 : bits_ & ~(~std::uint64_t{0} >> (2 * n));
    return w;
  }

  Word suffix(int from) const noexcept {
    Word w;
    w.size_ = static_cast<std::uint8_t>(size_ - from);
    w.bits_ = from == 0 ? bits_ : bits_ << (2 * from);
    return w;
  }

  /// Rotation moving the first `n` letters to the end.
  Word rotate(int n) const { return suffix(n) * prefix(n); }

  friend Word operator*(const Word& lhs, const Word& rhs) {
    if (lhs.size_ + rhs.size_ > kMaxWordDegree)
      throw invalid_input("word degree exceeds " + std::to_string(kMaxWordDegree));
    Word w;
    w.size_ = static_cast<std::uint8_t>(lhs.size_ + rhs.size_);
    w.bits_ = lhs.bits_ | (lhs.size_ == 0 ? rhs.bits_ : rhs.bits_ >> (2 * lhs.size_));
    return w;
  }

  std::string str() const {
    std::string out;
    out.reserve(size_);
    for (int i = 0; i < size_; ++i)
      out.push_back(Alphabet::symbol((*this)[i]));
    return out;
  }

  std::uint64_t packed() const noexcept { return bits_; }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

private:
  static constexpr int shift(int i) noexcept { return 62 - 2 * i; }

  // Member order matters: defaulted <=> compares bits_ first.
  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

} // namespace splitoc

template <>
struct std::hash<splitoc::Word> {
  std::size_t operator()(const splitoc::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.packed() ^ w.size());
  }
};
