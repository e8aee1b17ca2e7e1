#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grpcalc/betti_bounds.hpp"
#include "grpcalc/chains.hpp"
#include "grpcalc/coset_enum.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

/// Shortest nonempty reduced word in the generators that is the identity.
/// `t` must be the regular action (trivial subgroup); InputError otherwise.
std::size_t girth_finite(const CosetTable& t);
/// Same for a finite group marked by the given elements.
std::size_t girth_finite(const FiniteGroup& g, std::span<const std::uint32_t> generators);

/// A quotient in which words are traced: any word moving some point of
/// `table` is nontrivial in the presented group.
struct Certificate {
  std::string label;
  CosetTable table;
};

std::vector<Certificate> chain_certificates(const Chain& chain);

struct GirthReport {
  std::size_t lower = 1;
  /// Every nonempty reduced word of length <= radius was certified, so
  /// `lower` is only "at least radius + 1".
  bool lower_exhausted = false;
  std::optional<Word> uncertified;  // shortest word no certificate separates
  std::optional<std::size_t> upper;  // nullopt: no relator, unbounded
  std::optional<Word> upper_witness;
  std::size_t radius = 0;
  std::vector<std::string> certificates;
  std::size_t words_checked = 0;

  bool exact() const { return upper && !lower_exhausted && lower == *upper; }
};

/// Certified interval [lower, upper] for the girth of the marked group.
GirthReport girth_interval(const Presentation& p, const std::vector<Certificate>& certificates,
                           std::size_t radius);
GirthReport girth_interval(const Presentation& p, const Chain& chain, std::size_t radius);

struct IneqVerdict {
  std::size_t k = 0;
  std::optional<std::size_t> shortest_relator;
  Rational bound;                        // k - 1 - 1/l, or k - 1 without relators
  std::optional<Rational> reciprocal;    // 1 / (k - 1 - bound)
  bool sharp = false;                    // reciprocal == shortest relator length
  bool upper_consistent = false;         // shortest relator length <= certified upper
  bool vacuous = false;
  bool pass = false;
  /// One line per supplied approximant.
  std::vector<std::string> level_notes;
  std::string note;
};

IneqVerdict ineq_consistency(const Presentation& p, const GirthReport& report,
                             const std::vector<Approximant>& approximants = {});

struct Z1SupportCheck {
  std::size_t relator = 0;
  std::size_t generator = 0;
  std::size_t support = 0;
  Rational bound;  // k N - N / support
  std::size_t dim_z1 = 0;
  bool pass = false;
  bool equality = false;
};

struct Z1SupportReport {
  std::size_t index = 0;
  std::size_t dim_z1 = 0;
  std::vector<Z1SupportCheck> checks;
  /// (relator, generator) pairs whose Fox image vanishes on the quotient.
  std::vector<std::pair<std::size_t, std::size_t>> skipped;
  bool vacuous = false;
  bool pass() const;
};

/// dim Z^1(G, Q[G/H]) <= k N - N / |supp d_i(r)| for every relator r and
/// generator i with nonzero image. Requires a normal subgroup table; throws
/// NonNormalTable otherwise.
Z1SupportReport z1_support_bound_check(const Presentation& p, const CosetTable& t);

}  // namespace grpcalc
