#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grpcalc/numeric.hpp"

namespace grpcalc {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  IntegerMatrix transpose() const;
  /// Appends the rows of `other` (same column count).
  void append_rows(const IntegerMatrix& other);
  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const IntegerMatrix& block);

  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const BigInt& s, const IntegerMatrix& a);
  IntegerMatrix& operator+=(const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Scales each row by the lcm of its denominators (rank preserving).
  IntegerMatrix clear_denominators() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Invariant factors d_1 | d_2 | ... | d_r (all positive); r is the rank.
struct SmithForm {
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const IntegerMatrix& m);
std::size_t rank_rational(const RationalMatrix& m);

/// Rank over F_p. Throws InputError unless p is a prime below 2^31.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);

/// True iff v lies in the rational row span of `basis`.
bool row_space_membership(const IntegerMatrix& basis, std::span<const BigInt> v);

/// Row Hermite normal form of the lattice spanned by the rows: nonzero rows in
/// echelon form with positive pivots and reduced entries above each pivot.
IntegerMatrix hermite_basis(const IntegerMatrix& generators);

/// Coordinates of each row of `sub` with respect to the echelon basis `basis`
/// (as produced by hermite_basis). Throws InvariantViolation if some row is
/// not an integral combination.
IntegerMatrix lattice_coordinates(const IntegerMatrix& basis, const IntegerMatrix& sub);

/// Gaussian elimination over F_p with incremental insertion; used for span
/// dimension computations where vectors arrive one at a time.
class ModPBasis {
 public:
  ModPBasis(std::size_t dimension, std::uint64_t p);
  /// Inserts v (entries already reduced mod p); returns true if the span grew.
  bool insert(std::vector<std::uint64_t> v);
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }

 private:
  std::size_t dimension_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;  // each normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace grpcalc
