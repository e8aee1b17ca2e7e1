#include <doctest.h>

#include <random>

#include "grpcalc/errors.hpp"
#include "grpcalc/words.hpp"
#include "support.hpp"

using namespace grpcalc;
using grpcalc::testing::pres;

namespace {

const Letter a{0, 1}, A{0, -1}, b{1, 1}, B{1, -1}, c{2, 1};

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  std::vector<Letter> aA{a, A};
  CHECK(reduce(aA).empty());
  std::vector<Letter> abBa{a, b, B, a};
  CHECK(reduce(abBa) == Word{a, a});
  Word w{a, b, a};
  CHECK(reduce(w.letters()) == w);
  std::vector<Letter> nested{a, b, c, c.inverse(), B, A, b};
  CHECK(reduce(nested) == Word{b});
}

TEST_CASE("concat, invert and cyclic reduction") {
  CHECK(invert(Word{a, b}) == Word{B, A});
  CHECK(concat(Word{a, b}, Word{B, c}) == Word{a, c});
  auto [core, conj] = cyclic_reduce(Word{b, a, a, B});
  CHECK(core == Word{a, a});
  CHECK(conj == Word{b});
  CHECK(word_length(Word{}) == 0);
  CHECK(word_length(Word{a, b, a, b}) == 4);
  CHECK(word_length(Word{b, a, a, B}) == 4);
  CHECK(cyclic_length(Word{b, a, a, B}) == 2);
  CHECK(exponent_sum(Word{a, b, A, A}, 0) == -1);
}

TEST_CASE("word algebra properties on random words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Word w = grpcalc::testing::random_word(rng, 3, 14);
    Word v = grpcalc::testing::random_word(rng, 3, 14);
    CHECK(concat(w, invert(w)).empty());
    CHECK(reduce(w.letters()) == w);
    CHECK(invert(concat(w, v)) == concat(invert(v), invert(w)));
    auto [core, conj] = cyclic_reduce(w);
    if (core.size() > 1) CHECK(core[0] != core[core.size() - 1].inverse());
    CHECK(conj * core * conj.inverse() == w);
    CHECK(w.power(3) == w * w * w);
    CHECK(w.power(-2) == w.inverse() * w.inverse());
  }
}

TEST_CASE("parser examples") {
  Presentation f1 = pres("gens: a; rels: ;");
  CHECK(f1.generator_count() == 1);
  CHECK(f1.relators().empty());

  Presentation s3 = pres("gens: a,b; rels: a^2, b^3, (a*b)^2;");
  REQUIRE(s3.relators().size() == 3);
  CHECK(s3.relators()[0] == Word{a, a});
  CHECK(s3.relators()[1] == Word{b, b, b});
  CHECK(s3.relators()[2] == Word{a, b, a, b});

  Presentation z2 = pres("gens: a,b; rels: [a,b];");
  REQUIRE(z2.relators().size() == 1);
  CHECK(z2.relators()[0] == Word{A, B, a, b});

  Presentation neg = pres("gens: x; rels: x^-3;");
  CHECK(neg.relators()[0] == Word{Letter{0, -1}, Letter{0, -1}, Letter{0, -1}});
}

TEST_CASE("parser stores the cyclic core and warns") {
  std::vector<ParseWarning> warnings;
  Presentation p = parse_presentation("gens: a, b;\nrels: b*a^2*b^-1, a^0, a*a^-1;\n", &warnings);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{a, a});
  CHECK(warnings.size() >= 3);
}

TEST_CASE("parser comments and whitespace") {
  Presentation p = pres("# header\ngens:   a ,\n b_2 ; # trailing\nrels: [ a , b_2 ] ;");
  CHECK(p.generator_names() == std::vector<std::string>{"a", "b_2"});
  CHECK(p.relators().size() == 1);
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_presentation("gens: a, b;\nrels: a*c;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_presentation("gens: ; rels: ;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a, a; rels: ;"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: a^2"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: (a;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: [a];"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: a^;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: a^9999999;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: a; extra"), ParseError);
}

TEST_CASE("render round-trips through the parser") {
  for (const std::string& name : grpcalc::testing::corpus_all()) {
    Presentation p = grpcalc::testing::corpus(name);
    CHECK(parse_presentation(render(p)) == p);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> rels;
    for (int r = 0; r < 3; ++r) rels.push_back(grpcalc::testing::random_word(rng, 3, 10));
    Presentation p({"x", "y", "z"}, rels);
    CHECK(parse_presentation(render(p)) == p);
  }
}

TEST_CASE("render_word compresses runs") {
  std::vector<std::string> names{"a", "b"};
  CHECK(render_word(Word{a, a, B}, names) == "a^2*b^-1");
  CHECK(render_word(Word{}, names) == "1");
}

TEST_CASE("normal generator lists") {
  Presentation p = pres("gens: a, b; rels: a^2, b^3, (a*b)^7;");
  NormalGeneratorSpec d = default_normal_generators(p);
  REQUIRE(d.size() == 2);
  CHECK(d.orders[0] == Order::finite(2));
  CHECK(d.orders[1] == Order::finite(3));
  NormalGeneratorSpec f2 = default_normal_generators(pres("gens: a, b; rels: ;"));
  CHECK(!f2.orders[0].is_finite());

  NormalGeneratorSpec s = parse_normal_generators("a*b:7, b:inf", p);
  REQUIRE(s.size() == 2);
  CHECK(s.elements[0] == Word{a, b});
  CHECK(s.orders[0] == Order::finite(7));
  CHECK(!s.orders[1].is_finite());
  CHECK_THROWS_AS(parse_normal_generators("a:0", p), InputError);
  CHECK_THROWS_AS(parse_normal_generators("a", p), InputError);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({}, {}), InputError);
  CHECK_THROWS_AS(Presentation({"a"}, {Word{b}}), InputError);
  Presentation p({"a", "b"}, {Word{b, a, B}, Word{a, A}});
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{a});
}
