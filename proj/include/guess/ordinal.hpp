#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace guess {

struct OrdinalTerm;

// An ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + w^e2 * c2 + ... + w^en * cn,   e1 > e2 > ... > en, ci >= 1.
// The empty term list is 0. Coefficients are 64-bit; arithmetic that would
// overflow a coefficient throws Error(ordinal_overflow).
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(Ordinal exponent, std::uint64_t coefficient = 1);

  const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  // Nonzero with no finite tail.
  bool is_limit() const noexcept;
  bool is_successor() const noexcept;

  // n in the decomposition a = lambda + n, lambda a limit or 0.
  std::uint64_t finite_part() const noexcept;
  // Throws invalid_argument unless is_finite().
  std::uint64_t to_finite() const;
  // a - 1 for a successor ordinal; throws invalid_argument otherwise.
  Ordinal predecessor() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<OrdinalTerm> terms);
  friend Ordinal add(const Ordinal& a, const Ordinal& b);

  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

enum class Parity { even, odd };

inline Parity parity_of(std::uint64_t n) noexcept {
  return n % 2 == 0 ? Parity::even : Parity::odd;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
// Non-commutative ordinal sum: add(1, w) == w, add(w, 1) == w+1.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal operator+(const Ordinal& a, const Ordinal& b);
Parity parity(const Ordinal& a) noexcept;
bool congruent(const Ordinal& a, const Ordinal& b) noexcept;

// Text form: `w^<exp>*<coef> + ... + <n>`; finite values print as decimals,
// compound exponents are parenthesised. The parser also accepts the
// shorthands `w`, `w^e`, `w*c` and any sum, which it normalises with add().
std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace guess
