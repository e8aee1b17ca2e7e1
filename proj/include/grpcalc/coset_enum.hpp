#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grpcalc/exact_linalg.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// Complete right action of the generators on the cosets H\G. Coset 0 is H.
/// Immutable once constructed; the constructor checks that every generator
/// acts by a bijection and that the action is transitive.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::vector<std::vector<std::uint32_t>> forward,
             std::vector<Word> subgroup_words = {});

  /// The table of the whole group acting on a single coset.
  static CosetTable trivial(std::size_t generator_count);

  std::size_t size() const noexcept { return size_; }
  std::size_t generator_count() const noexcept { return forward_.size(); }

  std::uint32_t act(std::uint32_t coset, Letter x) const noexcept {
    return x.sign > 0 ? forward_[x.generator][coset] : inverse_[x.generator][coset];
  }
  const std::vector<std::uint32_t>& permutation(std::uint32_t g) const { return forward_.at(g); }
  const std::vector<std::uint32_t>& inverse_permutation(std::uint32_t g) const {
    return inverse_.at(g);
  }
  const std::vector<Word>& subgroup_words() const noexcept { return subgroup_words_; }

  CosetTable with_subgroup_words(std::vector<Word> words) const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.forward_ == b.forward_ && a.subgroup_words_ == b.subgroup_words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint32_t>> forward_;
  std::vector<std::vector<std::uint32_t>> inverse_;
  std::vector<Word> subgroup_words_;
};

/// Todd-Coxeter enumeration (HLT with lookahead) of the cosets of the
/// subgroup generated by `subgroup`. The result is standardized.
/// Throws CosetLimitExceeded when more than `max_cosets` slots are needed.
CosetTable enumerate(const Presentation& p, std::span<const Word> subgroup,
                     std::size_t max_cosets = kDefaultMaxCosets);

/// Image of `start` under w, letters applied left to right.
std::uint32_t trace(const CosetTable& t, const Word& w, std::uint32_t start);

/// Permutation of the whole coset set induced by w.
std::vector<std::uint32_t> word_permutation(const CosetTable& t, const Word& w);

/// N x N 0/1 matrix; column c has its 1 in row trace(g^sign, c).
IntegerMatrix permutation_matrix(const CosetTable& t, std::uint32_t g, int sign);

/// Renumbers cosets in breadth-first discovery order from coset 0, scanning
/// g0, g0^-1, g1, g1^-1, ... Throws InvariantViolation if not transitive.
CosetTable standardize(const CosetTable& t);

/// Every relator fixes every coset.
bool relators_hold(const Presentation& p, const CosetTable& t);

/// Every subgroup word fixes every coset, i.e. H is normal in G.
bool is_normal(const CosetTable& t);

struct SchreierGenerator {
  std::uint32_t coset = 0;
  std::uint32_t generator = 0;
};

/// Reidemeister-Schreier presentation of the coset-0 stabilizer H.
struct SubgroupPresentation {
  Presentation presentation;
  /// H-generator j as a word in the G-generators.
  std::vector<Word> inclusion;
  std::vector<Word> transversal;
  /// H-generator j is x_{coset,generator} = t[c] g t[c.g]^-1.
  std::vector<SchreierGenerator> schreier;
  /// index[c * k + g] = H-generator index, or nullopt for tree edges.
  std::vector<std::optional<std::uint32_t>> index;
  std::size_t eliminated_tree_edges = 0;

  std::optional<std::uint32_t> generator_of(std::uint32_t coset, std::uint32_t g,
                                            std::size_t k) const {
    return index[static_cast<std::size_t>(coset) * k + g];
  }
};

SubgroupPresentation rewrite_subgroup(const Presentation& p, const CosetTable& t);

/// Rewrites a G-word that starts and ends at coset `start` into H-generators.
Word rewrite_word(const SubgroupPresentation& sp, const CosetTable& t, const Word& w,
                  std::uint32_t start = 0);

}  // namespace grpcalc
