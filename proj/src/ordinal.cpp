#include "guess/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "guess/error.hpp"

namespace guess {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorKind::ordinal_overflow: return "OrdinalOverflow";
    case ErrorKind::not_guessable: return "NotGuessable";
    case ErrorKind::chain_not_increasing: return "ChainNotIncreasing";
    case ErrorKind::bound_violation: return "BoundViolation";
    case ErrorKind::root_not_zero: return "RootNotZero";
    case ErrorKind::not_eventually_periodic: return "NotEventuallyPeriodic";
    case ErrorKind::not_open: return "NotOpen";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::parse: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorKind::ordinal_overflow, "ordinal coefficient overflow");
  }
  return a + b;
}

}  // namespace

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::finite(std::uint64_t n) {
  if (n == 0) return Ordinal{};
  return Ordinal{std::vector<OrdinalTerm>{OrdinalTerm{Ordinal{}, n}}};
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal{};
  return Ordinal{std::vector<OrdinalTerm>{OrdinalTerm{std::move(exponent), coefficient}}};
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_limit() const noexcept {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::finite_part() const noexcept {
  if (terms_.empty() || !terms_.back().exponent.is_zero()) return 0;
  return terms_.back().coefficient;
}

std::uint64_t Ordinal::to_finite() const {
  if (!is_finite()) {
    throw Error(ErrorKind::invalid_argument, "ordinal " + to_string(*this) + " is not finite");
  }
  return finite_part();
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) {
    throw Error(ErrorKind::invalid_argument,
                "ordinal " + to_string(*this) + " has no predecessor");
  }
  std::vector<OrdinalTerm> terms = terms_;
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal{std::move(terms)};
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms_) {
    auto c = compare(t.exponent, lead);
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back(OrdinalTerm{t.exponent, checked_add(t.coefficient, b.terms_.front().coefficient)});
        out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
        return Ordinal{std::move(out)};
      }
      break;
    }
  }
  out.insert(out.end(), b.terms_.begin(), b.terms_.end());
  return Ordinal{std::move(out)};
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

Ordinal succ(const Ordinal& a) { return add(a, Ordinal::finite(1)); }

Parity parity(const Ordinal& a) noexcept { return parity_of(a.finite_part()); }

bool congruent(const Ordinal& a, const Ordinal& b) noexcept { return parity(a) == parity(b); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w^";
    if (t.exponent.is_finite()) {
      out += std::to_string(t.exponent.to_finite());
    } else {
      out += "(" + to_string(t.exponent) + ")";
    }
    out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

namespace {

// expr := term ('+' term)* ; term := INT | 'w' ['^' atom] ['*' INT]
// atom := INT | 'w' | '(' expr ')'
class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  Ordinal expr() {
    Ordinal value = term();
    while (consume('+')) value = add(value, term());
    return value;
  }

  Ordinal term() {
    skip_space();
    if (peek_digit()) return Ordinal::finite(integer());
    if (!consume('w')) fail("expected integer or 'w'");
    Ordinal exponent = Ordinal::finite(1);
    if (consume('^')) exponent = atom();
    std::uint64_t coefficient = 1;
    if (consume('*')) {
      coefficient = integer();
      if (coefficient == 0) fail("coefficient must be positive");
    }
    return Ordinal::omega_power(exponent, coefficient);
  }

  Ordinal atom() {
    skip_space();
    if (peek_digit()) return Ordinal::finite(integer());
    if (consume('w')) return Ordinal::omega();
    if (!consume('(')) fail("expected exponent");
    Ordinal value = expr();
    if (!consume(')')) fail("expected ')'");
    return value;
  }

  std::uint64_t integer() {
    skip_space();
    if (!peek_digit()) fail("expected integer");
    std::uint64_t n = 0;
    while (peek_digit()) {
      auto digit = static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw Error(ErrorKind::ordinal_overflow, "integer literal too large");
      }
      n = n * 10 + digit;
    }
    return n;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    std::ostringstream msg;
    msg << "bad ordinal '" << text_ << "' at offset " << pos_ << ": " << what;
    throw Error(ErrorKind::parse, msg.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser{text}.parse(); }

}  // namespace guess
