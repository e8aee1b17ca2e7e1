#include <doctest.h>

#include <random>

#include "grpcalc/fox.hpp"
#include "support.hpp"

using namespace grpcalc;
using grpcalc::testing::pres;

namespace {

const Letter g1{0, 1}, G1{0, -1}, g2{1, 1};

FreeRingElement fox_sum(const Word& w, std::uint32_t k) {
  FreeRingElement s;
  for (std::uint32_t i = 0; i < k; ++i)
    s += fox_derivative(w, i) * (FreeRingElement::of(Word::generator(i)) - FreeRingElement::one());
  return s;
}

}  // namespace

TEST_CASE("Fox derivative examples") {
  CHECK(fox_derivative(Word{g1}, 0) == FreeRingElement::one());
  FreeRingElement e = FreeRingElement::one() - FreeRingElement::of(Word{g1, g2, G1});
  CHECK(fox_derivative(Word{g1, g2, G1}, 0) == e);
  CHECK(fox_derivative(Word{g2, g2, g2}, 0).is_zero());
  CHECK(fox_derivative(Word{G1}, 0) == FreeRingElement::of(Word{G1}, -1));
}

TEST_CASE("support sizes") {
  CHECK(support_size(FreeRingElement()) == 0);
  Word abab{g1, g2, g1, g2};
  CHECK(support_size(fox_derivative(abab, 0)) == 2);
  CHECK(fox_derivative(abab, 0) == FreeRingElement::one() + FreeRingElement::of(Word{g1, g2}));
  CHECK(support_size(fox_derivative(abab, 0)) + support_size(fox_derivative(abab, 1)) == 4);
}

TEST_CASE("fundamental identity on random words") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    Word w = grpcalc::testing::random_word(rng, k, 12);
    CHECK(fox_sum(w, k) == FreeRingElement::of(w) - FreeRingElement::one());
  }
}

TEST_CASE("total support equals word length") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    Word w = grpcalc::testing::random_word(rng, k, 16);
    std::size_t total = 0;
    for (std::uint32_t i = 0; i < k; ++i) total += support_size(fox_derivative(w, i));
    CHECK(total == w.size());
  }
}

TEST_CASE("product rule") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    Word u = grpcalc::testing::random_word(rng, 2, 8), v = grpcalc::testing::random_word(rng, 2, 8);
    for (std::uint32_t i = 0; i < 2; ++i)
      CHECK(fox_derivative(u * v, i) == fox_derivative(u, i) + FreeRingElement::of(u) * fox_derivative(v, i));
  }
}

TEST_CASE("evaluation examples") {
  CosetTable c2 = enumerate(pres("gens: g; rels: g^2;"), {});
  CHECK(evaluate(FreeRingElement::one(), c2) == IntegerMatrix::identity(2));
  IntegerMatrix m = evaluate(FreeRingElement::one() - FreeRingElement::of(Word::generator(0)), c2);
  CHECK(m == IntegerMatrix{{1, -1}, {-1, 1}});
  CHECK(rank_rational(m) == 1);
  for (std::size_t n = 2; n <= 8; ++n) {
    CosetTable cn = enumerate(pres("gens: g; rels: g^" + std::to_string(n) + ";"), {});
    FreeRingElement s;
    for (std::size_t j = 0; j < n; ++j) s += FreeRingElement::of(Word::generator(0).power(static_cast<std::int64_t>(j)));
    IntegerMatrix all = evaluate(s, cn);
    bool ones = true;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ones = ones && all(r, c) == 1;
    CHECK(ones);
    CHECK(rank_rational(all) == 1);
  }
}

TEST_CASE("evaluation is multiplicative") {
  CosetTable t = enumerate(grpcalc::testing::corpus("finite/a4.grp"), {});
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    Word u = grpcalc::testing::random_word(rng, 2, 8), v = grpcalc::testing::random_word(rng, 2, 8);
    CHECK(word_matrix(t, u * v) == word_matrix(t, u) * word_matrix(t, v));
    for (std::uint32_t gen = 0; gen < 2; ++gen)
      CHECK(evaluate(fox_derivative(u * v, gen), t) ==
            evaluate(fox_derivative(u, gen), t) + word_matrix(t, u) * evaluate(fox_derivative(v, gen), t));
    CHECK(evaluate(FreeRingElement::of(u) + FreeRingElement::of(v, 3), t) ==
          word_matrix(t, u) + BigInt(3) * word_matrix(t, v));
  }
}
