#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "grpcalc/coset_enum.hpp"
#include "grpcalc/exact_linalg.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

/// Element of the integral group ring Z[F_k]; terms kept in shortlex order
/// with zero coefficients never stored.
class FreeRingElement {
 public:
  using Terms = std::map<Word, BigInt, ShortLex>;

  FreeRingElement() = default;
  static FreeRingElement one() { return of(Word()); }
  static FreeRingElement of(const Word& w, const BigInt& coefficient = 1);

  void add_term(const Word& w, const BigInt& coefficient);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FreeRingElement& operator+=(const FreeRingElement& o);
  FreeRingElement& operator-=(const FreeRingElement& o);
  friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b) { return a += b; }
  friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b) { return a -= b; }
  friend FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b);
  friend bool operator==(const FreeRingElement&, const FreeRingElement&) = default;

 private:
  Terms terms_;
};

/// Fox derivative with respect to generator i.
FreeRingElement fox_derivative(const Word& w, std::uint32_t i);

/// Number of stored terms.
std::size_t support_size(const FreeRingElement& e);

/// Matrix of w acting on Q[G/H] from the left, g.(Hx) = Hxg^-1: column c has
/// its 1 in row trace(w^-1, c). This makes w -> matrix a homomorphism.
IntegerMatrix word_matrix(const CosetTable& t, const Word& w);

/// Sum of coefficient * word_matrix over the terms of e.
IntegerMatrix evaluate(const FreeRingElement& e, const CosetTable& t);

}  // namespace grpcalc
