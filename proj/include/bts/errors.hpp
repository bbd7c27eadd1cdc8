#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bts {

using Int = std::int64_t;

enum class ErrorCode {
  NonPositiveN,
  NotCoprime,
  ZeroMNotSpun,
  SpunKnotHasNoPartner,
  InvalidState,
  DegenerateTwist,
  NotUnimodular,
  DegreeTooLarge,
  MissingPeripheral,
  WrongLabel,
  DisconnectedComplex,
  InvalidWord,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Raised when an input is outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed knot file or command-line token. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Checked arithmetic. Every integer in this library is exact; overflow is an error.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer multiplication");
  return r;
}

}  // namespace bts
