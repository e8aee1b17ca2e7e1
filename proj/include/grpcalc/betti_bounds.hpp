#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grpcalc/chains.hpp"
#include "grpcalc/cohomology.hpp"
#include "grpcalc/numeric.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

struct Approximant {
  std::size_t level = 0;
  std::size_t index = 0;
  std::size_t h1 = 0;
  Rational normalized;  // h1 / index
  CohomologyReport cohomology;
};

/// One side-by-side inequality check, lhs <= rhs.
struct BoundCheck {
  std::string name;
  std::size_t level = 0;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;
};

struct BettiReport {
  std::optional<std::uint64_t> p;
  std::vector<std::size_t> chain_indexes;
  Truncation truncation = Truncation::none;
  std::string truncation_reason;
  std::vector<Approximant> approximants;
  std::map<std::string, Rational> bounds;
  std::map<std::string, std::string> notes;
  std::vector<BoundCheck> checks;

  std::vector<BoundCheck> violations() const;
};

/// Normalized first Betti numbers dim H^1(G, Q[G/H_n]) / [G:H_n] along the chain.
BettiReport approx_sequence(const Presentation& g, const Chain& chain);

Rational trivial_bound(std::size_t k);

/// k - 1 - sum 1/n_i with 1/inf = 0.
Rational torsion_bound(const NormalGeneratorSpec& spec);
Rational torsion_bound(std::span<const Order> orders);

struct ModPBound {
  std::size_t dimension = 0;  // dim_{F_p} H^1(G; F_p)
  Rational value;             // dimension - 1
  bool vacuous = false;       // G has no p-quotient
};
ModPBound mod_p_bound(const Presentation& g, std::uint64_t prime);

struct PiImageVerdict {
  std::vector<BigInt> image_orders;  // m_i
  Rational lhs;                      // dim H^1(G, Q[G/H])
  Rational rhs;                      // N sum(1 - 1/n_i) - N + 1
  Rational rhs_sharp;                // same with 1 - 1/m_i for finite n_i
  bool pass = false;
  bool pass_sharp = false;
};

class NonNormalTable : public InputError {
 public:
  explicit NonNormalTable(const std::string& what) : InputError(what, "NonNormalTable") {}
};

/// Per-level inequality behind the normal-generation bound. Requires the
/// subgroup of `t` to be normal; throws NonNormalTable otherwise and
/// InputError when an image order does not divide a declared finite order.
PiImageVerdict pi_image_check(const Presentation& g, const NormalGeneratorSpec& spec,
                              const CosetTable& t);
PiImageVerdict pi_image_check(const Presentation& g, const NormalGeneratorSpec& spec,
                              const CosetTable& t, std::size_t dim_h1);

struct Summand {
  Rational beta;
  Order order;
};

/// n - 1 + sum(beta_i - 1/|G_i|) - sum 1/w_j for a free product with
/// relators of orders w_j.
Rational free_product_lower_bound(std::span<const Summand> summands,
                                  std::span<const std::uint64_t> relator_orders);

/// k - 1 - 1/l with l the shortest cyclic relator length; k - 1 without relators.
Rational relator_length_bound(const Presentation& g);
Rational relator_length_bound(std::size_t k, const Presentation& g);

/// Full report: approximants, every closed-form bound, and the per-level
/// pi-image and support checks.
BettiReport betti_report(const Presentation& g, const Chain& chain, const NormalGeneratorSpec& spec);

}  // namespace grpcalc
