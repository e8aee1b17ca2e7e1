#include "grpcalc/fox.hpp"

#include "grpcalc/errors.hpp"

namespace grpcalc {

FreeRingElement FreeRingElement::of(const Word& w, const BigInt& coefficient) {
  FreeRingElement e;
  e.add_term(w, coefficient);
  return e;
}

void FreeRingElement::add_term(const Word& w, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeRingElement& FreeRingElement::operator+=(const FreeRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeRingElement& FreeRingElement::operator-=(const FreeRingElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b) {
  FreeRingElement out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  return out;
}

FreeRingElement fox_derivative(const Word& w, std::uint32_t i) {
  // d(x1...xn) = sum_j x1...x_{j-1} d(x_j); d(g) = 1, d(g^-1) = -g^-1
  FreeRingElement out;
  auto letters = w.letters();
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j].generator != i) continue;
    if (letters[j].sign > 0)
      out.add_term(w.prefix(j), 1);
    else
      out.add_term(w.prefix(j + 1), -1);
  }
  return out;
}

std::size_t support_size(const FreeRingElement& e) { return e.terms().size(); }

IntegerMatrix word_matrix(const CosetTable& t, const Word& w) {
  if (w.max_generator_bound() > t.generator_count())
    throw InputError("word_matrix: word uses a generator outside the table");
  const Word winv = w.inverse();
  IntegerMatrix m(t.size(), t.size());
  for (std::uint32_t c = 0; c < t.size(); ++c) m(trace(t, winv, c), c) = 1;
  return m;
}

IntegerMatrix evaluate(const FreeRingElement& e, const CosetTable& t) {
  IntegerMatrix m(t.size(), t.size());
  for (const auto& [w, coeff] : e.terms()) {
    if (w.max_generator_bound() > t.generator_count())
      throw InputError("evaluate: word uses a generator outside the table");
    const Word winv = w.inverse();
    for (std::uint32_t c = 0; c < t.size(); ++c) m(trace(t, winv, c), c) += coeff;
  }
  return m;
}

}  // namespace grpcalc
