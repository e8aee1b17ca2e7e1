#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpcalc/coset_enum.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/exact_linalg.hpp"
#include "grpcalc/numeric.hpp"

namespace grpcalc {

/// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the identity law, inverses and (on up to `associativity_samples`
  /// seeded random triples, or exhaustively for |G| <= 16) associativity.
  static FiniteGroup from_multiplication_table(std::vector<std::vector<std::uint32_t>> mul,
                                               std::size_t associativity_samples = 2000);

  /// The permutation group generated by the table's generator permutations,
  /// listed by breadth-first closure from the identity. generators()[g] is
  /// the element of generator g.
  static FiniteGroup from_table(const CosetTable& t, std::size_t max_order = 50'000);

  std::size_t order() const noexcept { return mul_.size(); }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
  const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<std::uint32_t>>& multiplication_table() const noexcept { return mul_; }
  /// "table" or "coset_table"
  const std::string& provenance() const noexcept { return provenance_; }

 private:
  std::vector<std::vector<std::uint32_t>> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> generators_;
  std::string provenance_;
};

/// Element of Q[G], zero coefficients never stored.
class RingElement {
 public:
  RingElement() = default;
  static RingElement delta(std::uint32_t g) {
    RingElement e;
    e.add(g, 1);
    return e;
  }
  void add(std::uint32_t g, const Rational& c);
  const std::map<std::uint32_t, Rational>& coefficients() const noexcept { return coeffs_; }
  std::size_t support() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

 private:
  std::map<std::uint32_t, Rational> coeffs_;
};

/// Column h holds the coefficients of f * h.
RationalMatrix left_multiplication_matrix(const FiniteGroup& g, const RingElement& f);

struct UncertaintyResult {
  std::size_t rank = 0;
  std::size_t support = 0;
  std::size_t order = 0;
  bool pass = false;
  bool equality = false;
};

/// rank(f . Q[G]) * |supp f| >= |G|. Throws InputError("ZeroElement") for f = 0.
UncertaintyResult uncertainty_check(const FiniteGroup& g, const RingElement& f);

struct UncertaintySweep {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t equalities = 0;
  /// First counterexample found, if any, for audit.
  std::optional<RingElement> counterexample;
};

/// Every nonzero f with |supp f| <= max_support and coefficients drawn from
/// `coefficients` (which must not contain 0).
UncertaintySweep exhaustive_uncertainty(const FiniteGroup& g, std::size_t max_support,
                                        std::span<const long> coefficients);

/// Seeded random elements; element i depends only on (seed, i).
UncertaintySweep random_uncertainty(const FiniteGroup& g, std::size_t samples, std::uint64_t seed);

RingElement random_element(const FiniteGroup& g, std::uint64_t seed, std::uint64_t i);

struct AugmentationChain {
  std::optional<std::uint64_t> p;  // nullopt: integer coefficients
  std::vector<std::size_t> dims;   // dims[n-1] = dim omega^n
  bool reached_zero = false;
  /// Power at which the sequence vanished or first repeated.
  std::size_t terminal_power = 0;
};

class DepthExceeded : public CapExceeded {
 public:
  DepthExceeded(std::size_t depth, std::vector<std::size_t> dims)
      : CapExceeded("DepthExceeded", "augmentation powers did not terminate within depth " + std::to_string(depth)),
        dims_(std::move(dims)) {}
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

 private:
  std::vector<std::size_t> dims_;
};

/// Powers of the augmentation ideal of F_p[G] until the dimension vanishes or repeats.
AugmentationChain augmentation_powers_mod_p(const FiniteGroup& g, std::uint64_t p, std::size_t max_depth = 64);

/// True iff the augmentation ideal of F_p[G] is nilpotent; cross-checked
/// against the factorization of |G| (InvariantViolation on mismatch).
bool p_group_verdict(const FiniteGroup& g, std::uint64_t p);

struct IntegerAugmentationLevel {
  std::size_t power = 0;
  std::size_t rank = 0;
  IntegerMatrix basis;                    // Hermite basis in the group basis
  std::vector<BigInt> divisors_in_previous;  // invariant factors of omega^n in omega^(n-1)
  BigInt index_in_previous;               // product of the divisors (0 if rank dropped)
};

/// Exploratory: lattice bases of omega^n in Z[G] for n = 1..max_depth. No
/// verdict about the intersection of all powers is drawn.
std::vector<IntegerAugmentationLevel> augmentation_powers_integer(const FiniteGroup& g, std::size_t max_depth);

}  // namespace grpcalc
