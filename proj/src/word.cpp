#include "guess/word.hpp"

#include <algorithm>
#include <ostream>

#include "guess/error.hpp"

namespace guess {

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
  if (size < 2 || size > max_size) {
    throw Error(ErrorKind::invalid_argument,
                "alphabet size must be in [2, 36], got " + std::to_string(size));
  }
}

void Alphabet::check(const Word& w) const {
  for (Symbol s : w) {
    if (!contains(s)) {
      throw Error(ErrorKind::alphabet_mismatch,
                  "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(size_));
    }
  }
}

void require_same_alphabet(Alphabet a, Alphabet b, std::string_view what) {
  if (a != b) {
    throw Error(ErrorKind::alphabet_mismatch,
                std::string(what) + ": alphabet sizes " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " differ");
  }
}

char symbol_char(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

std::string word_to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out += symbol_char(s);
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      w.push_back(static_cast<Symbol>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      w.push_back(static_cast<Symbol>(c - 'a' + 10));
    } else {
      throw Error(ErrorKind::parse, std::string("bad symbol '") + c + "' in word '" + std::string(text) + "'");
    }
  }
  return w;
}

namespace {

Word primitive_root(const Word& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = v[i] == v[i - p];
    if (ok) return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return v;
}

}  // namespace

UPWord::UPWord(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::invalid_argument, "UP word period must be nonempty");
  period_ = primitive_root(period_);
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    prefix_.pop_back();
  }
}

Symbol UPWord::at(std::size_t i) const noexcept {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Word UPWord::take(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

std::string to_string(const UPWord& w) {
  return word_to_string(w.prefix()) + "(" + word_to_string(w.period()) + ")";
}

UPWord parse_up_word(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos || text.size() < open + 3 || text.back() != ')') {
    throw Error(ErrorKind::parse, "UP word literal must look like u(v): '" + std::string(text) + "'");
  }
  return UPWord(parse_word(text.substr(0, open)), parse_word(text.substr(open + 1, text.size() - open - 2)));
}

std::ostream& operator<<(std::ostream& os, const UPWord& w) { return os << to_string(w); }

namespace {

// Calls f(word) for every word of exactly `length` symbols, lexicographic.
template <typename F>
void for_each_word(Alphabet alphabet, std::size_t length, F&& f) {
  Word w(length, 0);
  while (true) {
    f(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == alphabet.size()) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

}  // namespace

std::vector<UPWord> canonical_up_words(Alphabet alphabet, std::size_t count) {
  std::vector<UPWord> out;
  out.reserve(count);
  for (std::size_t total = 1; out.size() < count; ++total) {
    for (std::size_t ulen = 0; ulen < total && out.size() < count; ++ulen) {
      for_each_word(alphabet, ulen, [&](const Word& u) {
        if (out.size() >= count) return;
        for_each_word(alphabet, total - ulen, [&](const Word& v) {
          if (out.size() >= count) return;
          UPWord w(u, v);
          if (w.prefix() == u && w.period() == v) out.push_back(std::move(w));
        });
      });
    }
  }
  return out;
}

std::vector<Word> words_up_to(Alphabet alphabet, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    for_each_word(alphabet, len, [&](const Word& w) { out.push_back(w); });
  }
  return out;
}

}  // namespace guess
