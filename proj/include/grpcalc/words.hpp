#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grpcalc/numeric.hpp"

namespace grpcalc {

/// A generator or its inverse. Generators are referenced by 0-based index.
struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const noexcept {
    return {generator, static_cast<std::int8_t>(-sign)};
  }
  /// Column index in a coset table: 2g for g, 2g+1 for g^-1.
  constexpr std::uint32_t code() const noexcept { return 2 * generator + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_code(std::uint32_t code) noexcept {
    return {code / 2, static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept { return a.code() <=> b.code(); }
};

/// A freely reduced word in the free group on the generators.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letter sequence.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(std::uint32_t g, int sign = 1) {
    return Word({Letter{g, static_cast<std::int8_t>(sign)}});
  }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::size_t max_generator_bound() const noexcept;

  Word inverse() const;
  Word power(std::int64_t n) const;
  /// Letters [0, n), already reduced.
  Word prefix(std::size_t n) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortlex order: shorter first, then lexicographic by letter code.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept;
};

Word reduce(std::span<const Letter> letters);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

std::size_t word_length(const Word& w);
std::size_t cyclic_length(const Word& w);
/// Sum of exponents of generator g in w.
std::int64_t exponent_sum(const Word& w, std::uint32_t g);

/// A finite presentation. Relators are stored cyclically reduced and nonempty.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::string& name(std::uint32_t g) const { return names_.at(g); }
  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::vector<Word>& relators() const noexcept { return relators_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Elements assumed to normally generate G, with declared orders.
struct NormalGeneratorSpec {
  std::vector<Word> elements;
  std::vector<Order> orders;

  std::size_t size() const noexcept { return elements.size(); }
};

/// The presentation's generators, each with order n when a relator g^n is
/// present and infinity otherwise. A relator g^n only bounds the true order
/// from above (as a multiple), which keeps every consuming bound valid.
NormalGeneratorSpec default_normal_generators(const Presentation& p);

struct ParseWarning {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

/// Parses the `.grp` grammar:
///   gens: a, b; rels: a^2, b^3, (a*b)^2, [a,b];
Presentation parse_presentation(std::string_view text,
                                std::vector<ParseWarning>* warnings = nullptr);

/// Comma-separated words over an existing presentation's generators.
std::vector<Word> parse_word_list(std::string_view text, const Presentation& p);
Word parse_word(std::string_view text, const Presentation& p);

/// "word:order, word:order" where order is a positive integer or "inf".
NormalGeneratorSpec parse_normal_generators(std::string_view text, const Presentation& p);

std::string render_word(const Word& w, std::span<const std::string> names);
std::string render(const Presentation& p);

}  // namespace grpcalc
