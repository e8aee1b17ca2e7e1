#include <doctest.h>

#include <cstdlib>

#include "grpcalc/cohomology.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/groupring.hpp"
#include "support.hpp"

using namespace grpcalc;
using grpcalc::testing::corpus;
using grpcalc::testing::cyclic;
using grpcalc::testing::finite;

namespace {

RingElement one_minus_gen(const FiniteGroup& g) {
  RingElement f = RingElement::delta(0);
  f.add(g.generators()[0], -1);
  return f;
}

RingElement sum_all(const FiniteGroup& g) {
  RingElement f;
  for (std::uint32_t x = 0; x < g.order(); ++x) f.add(x, 1);
  return f;
}

bool is_power_of(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("finite groups from coset tables") {
  for (const std::string& name : grpcalc::testing::finite_corpus()) {
    FiniteGroup g = finite(corpus(name));
    CHECK(g.order() == enumerate(corpus(name), {}).size());
    for (std::uint32_t a = 0; a < g.order(); ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      CHECK(g.multiply(0, a) == a);
    }
    CHECK_NOTHROW(FiniteGroup::from_multiplication_table(g.multiplication_table()));
  }
}

TEST_CASE("multiplication table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{1, 0}, {0, 1}}), InputError);
  // a Latin square with identity 0 that is not associative
  std::vector<std::vector<std::uint32_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table(loop), InputError);
  FiniteGroup c2 = FiniteGroup::from_multiplication_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.generators() == std::vector<std::uint32_t>{1});
}

TEST_CASE("left multiplication examples") {
  FiniteGroup s3 = finite(corpus("finite/s3.grp"));
  RationalMatrix id = left_multiplication_matrix(s3, RingElement::delta(0));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
  FiniteGroup c2 = cyclic(2);
  RationalMatrix m = left_multiplication_matrix(c2, one_minus_gen(c2));
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == -1);
  CHECK(m(1, 0) == -1);
  CHECK(m(1, 1) == 1);
  FiniteGroup c3 = cyclic(3);
  RationalMatrix all = left_multiplication_matrix(c3, sum_all(c3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(all(i, j) == 1);
}

TEST_CASE("uncertainty examples") {
  FiniteGroup c6 = cyclic(6);
  UncertaintyResult r = uncertainty_check(c6, one_minus_gen(c6));
  CHECK(r.rank == 5);
  CHECK(r.support == 2);
  CHECK(r.pass);
  CHECK(!r.equality);
  UncertaintyResult e = uncertainty_check(c6, RingElement::delta(0));
  CHECK(e.rank == 6);
  CHECK(e.equality);
  UncertaintyResult s = uncertainty_check(c6, sum_all(c6));
  CHECK(s.rank == 1);
  CHECK(s.equality);
  CHECK_THROWS_AS(uncertainty_check(c6, RingElement{}), InputError);
}

TEST_CASE("exhaustive uncertainty over C6") {
  FiniteGroup c6 = cyclic(6);
  std::vector<long> coeffs{-1, 1, 2};
  UncertaintySweep s = exhaustive_uncertainty(c6, 3, coeffs);
  // 6*3 + 15*9 + 20*27
  CHECK(s.checked == 693);
  CHECK(s.violations == 0);
  CHECK(s.equalities > 0);
  CHECK(!s.counterexample);
  std::vector<long> with_zero{0, 1};
  CHECK_THROWS_AS(exhaustive_uncertainty(c6, 2, with_zero), InputError);
}

TEST_CASE("random uncertainty over small groups") {
  for (const std::string& name : {"finite/s3.grp", "finite/d4.grp", "finite/q8.grp", "c8.grp", "finite/a4.grp"}) {
    FiniteGroup g = finite(corpus(name));
    UncertaintySweep s = random_uncertainty(g, 1000, 42);
    CHECK(s.checked == 1000);
    CHECK(s.violations == 0);
  }
}

TEST_CASE("random elements depend only on seed and index") {
  FiniteGroup a4 = finite(corpus("finite/a4.grp"));
  CHECK(random_element(a4, 7, 3).coefficients() == random_element(a4, 7, 3).coefficients());
  CHECK(random_element(a4, 7, 3).coefficients() != random_element(a4, 8, 3).coefficients());
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(!random_element(a4, 1, i).is_zero());
}

TEST_CASE("thread count does not change results") {
  FiniteGroup d4 = finite(corpus("finite/d4.grp"));
  std::vector<long> coeffs{-1, 1, 2};
  setenv("GRPCALC_THREADS", "1", 1);
  UncertaintySweep one = exhaustive_uncertainty(d4, 2, coeffs);
  AugmentationChain aug_one = augmentation_powers_mod_p(d4, 2);
  setenv("GRPCALC_THREADS", "4", 1);
  UncertaintySweep four = exhaustive_uncertainty(d4, 2, coeffs);
  AugmentationChain aug_four = augmentation_powers_mod_p(d4, 2);
  unsetenv("GRPCALC_THREADS");
  CHECK(one.checked == four.checked);
  CHECK(one.equalities == four.equalities);
  CHECK(aug_one.dims == aug_four.dims);
}

TEST_CASE("augmentation powers mod p") {
  AugmentationChain c2 = augmentation_powers_mod_p(cyclic(2), 2);
  CHECK(c2.dims == std::vector<std::size_t>{1, 0});
  CHECK(c2.reached_zero);
  AugmentationChain c4 = augmentation_powers_mod_p(cyclic(4), 2);
  CHECK(c4.dims == std::vector<std::size_t>{3, 2, 1, 0});
  AugmentationChain s3 = augmentation_powers_mod_p(finite(corpus("finite/s3.grp")), 2);
  CHECK(!s3.reached_zero);
  CHECK(s3.dims.back() > 0);
  AugmentationChain c3 = augmentation_powers_mod_p(cyclic(3), 2);
  CHECK(c3.dims == std::vector<std::size_t>{2});
  CHECK(!c3.reached_zero);
  FiniteGroup trivial = FiniteGroup::from_table(CosetTable::trivial(1));
  for (std::uint64_t p : {2u, 3u, 5u}) CHECK(p_group_verdict(trivial, p));
  CHECK_THROWS_AS(augmentation_powers_mod_p(cyclic(2), 4), InputError);
}

TEST_CASE("augmentation dimensions strictly decrease until they stop") {
  for (const std::string& name : grpcalc::testing::finite_corpus())
    for (std::uint64_t p : {2u, 3u}) {
      FiniteGroup g = finite(corpus(name));
      AugmentationChain c = augmentation_powers_mod_p(g, p);
      CHECK(c.dims.front() == g.order() - 1);
      for (std::size_t i = 1; i < c.dims.size(); ++i) CHECK(c.dims[i] < c.dims[i - 1]);
      CHECK(p_group_verdict(g, p) == is_power_of(g.order(), p));
      CHECK(c.reached_zero == is_power_of(g.order(), p));
    }
}

TEST_CASE("integer augmentation powers") {
  auto c2 = augmentation_powers_integer(cyclic(2), 3);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0].rank == 1);
  CHECK(c2[1].divisors_in_previous == std::vector<BigInt>{2});
  CHECK(c2[2].divisors_in_previous == std::vector<BigInt>{2});
  CHECK(c2[2].basis == IntegerMatrix{{4, -4}});
  auto c3 = augmentation_powers_integer(cyclic(3), 3);
  CHECK(c3[1].index_in_previous == 3);
  CHECK(c3[2].index_in_previous == 3);
  // [omega : omega^2] = |G_ab|
  for (const std::string& name : grpcalc::testing::finite_corpus()) {
    FiniteGroup g = finite(corpus(name));
    auto levels = augmentation_powers_integer(g, 2);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].rank == g.order() - 1);
    Abelianization ab = abelianization(corpus(name));
    BigInt order = 1;
    for (const BigInt& t : ab.torsion) order *= t;
    if (ab.rank == 0) CHECK(levels[1].index_in_previous == order);
  }
}
