#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace guess {

enum class ErrorKind {
  invalid_argument,
  alphabet_mismatch,
  ordinal_overflow,
  not_guessable,
  chain_not_increasing,
  bound_violation,
  root_not_zero,
  not_eventually_periodic,
  not_open,
  budget_exceeded,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace guess
