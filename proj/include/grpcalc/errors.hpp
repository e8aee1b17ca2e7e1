#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpcalc {

/// Base of every error raised by the library. `kind()` is a stable
/// identifier used in structured reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, std::string kind = "InputError")
      : Error(std::move(kind), message) {}
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message,
                   "ParseError"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A resource cap was hit (coset count, quotient index, iteration depth).
class CapExceeded : public Error {
 public:
  CapExceeded(std::string kind, const std::string& message)
      : Error(std::move(kind), message) {}
};

class CosetLimitExceeded : public CapExceeded {
 public:
  explicit CosetLimitExceeded(std::size_t cap)
      : CapExceeded("CosetLimitExceeded",
                    "coset enumeration exceeded " + std::to_string(cap) +
                        " cosets; the index may be infinite or above the cap"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A mathematical invariant failed. Never a legitimate outcome.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message,
                              std::string kind = "InvariantViolation")
      : Error(std::move(kind), message) {}
};

}  // namespace grpcalc
