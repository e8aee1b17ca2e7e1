#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace grpcalc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "n" or "n/d" (optionally signed). Throws InputError on bad input.
Rational parse_rational(const std::string& text);

/// Fixed-point decimal rendering for display-only fields.
std::string to_decimal(const Rational& q, int digits = 6);

/// Order of a group element: a positive integer or infinity.
class Order {
 public:
  static Order infinite() { return Order(0); }
  static Order finite(std::uint64_t n);

  bool is_finite() const noexcept { return value_ != 0; }
  /// Only meaningful when is_finite().
  std::uint64_t value() const noexcept { return value_; }
  /// 1/n, with 1/infinity = 0.
  Rational reciprocal() const;

  std::string str() const;
  /// Accepts a positive integer, "inf" or "infinity".
  static Order parse(const std::string& text);

  friend bool operator==(Order, Order) = default;

 private:
  explicit Order(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

bool is_prime(std::uint64_t p);

}  // namespace grpcalc
