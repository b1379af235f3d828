#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace guess {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Finite alphabet {0, ..., k-1}, k >= 2. Symbols print as 0-9 then a-z.
class Alphabet {
 public:
  static constexpr std::uint32_t max_size = 36;

  explicit Alphabet(std::uint32_t size);

  std::uint32_t size() const noexcept { return size_; }
  bool contains(Symbol s) const noexcept { return s < size_; }
  void check(const Word& w) const;

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  std::uint32_t size_;
};

void require_same_alphabet(Alphabet a, Alphabet b, std::string_view what);

char symbol_char(Symbol s);
std::string word_to_string(const Word& w);
Word parse_word(std::string_view text);

// The ultimately periodic point u v v v ... . Construction canonicalises:
// v is reduced to its primitive root and u is shortened by rotating v while
// u and v share a last symbol, so equal points have equal representations.
class UPWord {
 public:
  UPWord(Word prefix, Word period);

  const Word& prefix() const noexcept { return prefix_; }
  const Word& period() const noexcept { return period_; }

  Symbol at(std::size_t i) const noexcept;
  Word take(std::size_t n) const;

  friend bool operator==(const UPWord&, const UPWord&) = default;
  friend auto operator<=>(const UPWord&, const UPWord&) = default;

 private:
  Word prefix_;
  Word period_;
};

// Literal syntax `u(v)`, e.g. `001(10)` is 001 (10)^w.
std::string to_string(const UPWord& w);
UPWord parse_up_word(std::string_view text);
std::ostream& operator<<(std::ostream& os, const UPWord& w);

// The first `count` canonical UP words over the alphabet ordered by
// |u|+|v|, then |u|, then lexicographically.
std::vector<UPWord> canonical_up_words(Alphabet alphabet, std::size_t count);

// All words of length <= max_length, shortlex order.
std::vector<Word> words_up_to(Alphabet alphabet, std::size_t max_length);

}  // namespace guess
