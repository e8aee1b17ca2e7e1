#include "grpcalc/betti_bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

#include "grpcalc/errors.hpp"

namespace grpcalc {

std::vector<BoundCheck> BettiReport::violations() const {
  std::vector<BoundCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const BoundCheck& c) { return !c.pass; });
  return out;
}

BettiReport approx_sequence(const Presentation& g, const Chain& chain) {
  BettiReport rep;
  rep.p = chain.p;
  rep.truncation = chain.truncation;
  rep.truncation_reason = chain.reason;
  for (const ChainLevel& level : chain.levels) {
    Approximant a;
    a.level = level.depth;
    a.index = level.index_in_g;
    a.cohomology = h1_dim(g, level.table, level.subgroup);
    a.h1 = a.cohomology.dim_h1;
    a.normalized = Rational(static_cast<unsigned long>(a.h1), static_cast<unsigned long>(a.index));
    a.normalized.canonicalize();
    rep.chain_indexes.push_back(a.index);
    rep.approximants.push_back(std::move(a));
  }
  rep.notes["approximants"] = "finite-level values dim H1(G, Q[G/H_n]) / [G:H_n]; no limit is claimed";
  rep.notes["hypothesis"] = "user-asserted: the chain intersects trivially (G residually p-finite)";
  return rep;
}

Rational trivial_bound(std::size_t k) {
  if (k < 1) throw InputError("trivial_bound needs k >= 1");
  return Rational(static_cast<long>(k) - 1);
}

Rational torsion_bound(const NormalGeneratorSpec& spec) {
  if (spec.elements.size() != spec.orders.size())
    throw InputError("normal generators: element and order counts differ");
  return torsion_bound(spec.orders);
}

Rational torsion_bound(std::span<const Order> orders) {
  if (orders.empty()) throw InputError("no normal generators given");
  Rational b(static_cast<long>(orders.size()) - 1);
  for (const Order& n : orders) b -= n.reciprocal();
  return b;
}

ModPBound mod_p_bound(const Presentation& g, std::uint64_t prime) {
  ModPQuotient q = mod_p_quotient_map(g, prime);
  ModPBound b;
  b.dimension = q.dimension;
  b.value = Rational(static_cast<long>(q.dimension) - 1);
  b.vacuous = q.dimension == 0;
  return b;
}

namespace {

BigInt permutation_order(const std::vector<std::uint32_t>& perm) {
  BigInt order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t c = 0; c < perm.size(); ++c) {
    if (seen[c]) continue;
    unsigned long len = 0;
    for (std::size_t x = c; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    mpz_lcm_ui(order.get_mpz_t(), order.get_mpz_t(), len);
  }
  return order;
}

bool is_prime_power(std::size_t n) {
  if (n == 1) return true;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

PiImageVerdict pi_image_check(const Presentation& g, const NormalGeneratorSpec& spec, const CosetTable& t) {
  if (!is_normal(t)) throw NonNormalTable("pi_image_check requires a normal subgroup table");
  return pi_image_check(g, spec, t, h1_dim(g, t).dim_h1);
}

PiImageVerdict pi_image_check(const Presentation& g, const NormalGeneratorSpec& spec, const CosetTable& t,
                              std::size_t dim_h1) {
  if (spec.elements.size() != spec.orders.size() || spec.elements.empty())
    throw InputError("pi_image_check: malformed normal generators");
  if (t.generator_count() != g.generator_count())
    throw InputError("pi_image_check: table and presentation disagree on generator count");
  if (!is_normal(t)) throw NonNormalTable("pi_image_check requires a normal subgroup table");
  const Rational n(static_cast<unsigned long>(t.size()));
  PiImageVerdict v;
  Rational sum = 0, sum_sharp = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.elements[i].max_generator_bound() > g.generator_count())
      throw InputError("pi_image_check: element uses an unknown generator");
    BigInt m = permutation_order(word_permutation(t, spec.elements[i]));
    const Order& declared = spec.orders[i];
    if (declared.is_finite()) {
      BigInt ni(static_cast<unsigned long>(declared.value()));
      if (!mpz_divisible_p(ni.get_mpz_t(), m.get_mpz_t()))
        throw InputError("declared order " + declared.str() + " of element " + std::to_string(i + 1) +
                         " is not a multiple of its image order " + m.get_str());
      sum_sharp += 1 - Rational(1) / Rational(m);
    } else {
      sum_sharp += 1;
    }
    sum += 1 - declared.reciprocal();
    v.image_orders.push_back(m);
  }
  v.lhs = Rational(static_cast<unsigned long>(dim_h1));
  v.rhs = n * sum - n + 1;
  v.rhs_sharp = n * sum_sharp - n + 1;
  v.pass = v.lhs <= v.rhs;
  v.pass_sharp = v.lhs <= v.rhs_sharp;
  return v;
}

Rational free_product_lower_bound(std::span<const Summand> summands, std::span<const std::uint64_t> relator_orders) {
  if (summands.empty()) throw InputError("free_product_lower_bound needs at least one summand");
  Rational b(static_cast<long>(summands.size()) - 1);
  for (const Summand& s : summands) b += s.beta - s.order.reciprocal();
  for (std::uint64_t w : relator_orders) {
    if (w < 1) throw InputError("relator orders must be positive");
    b -= Rational(1, static_cast<unsigned long>(w));
  }
  return b;
}

Rational relator_length_bound(const Presentation& g) { return relator_length_bound(g.generator_count(), g); }

Rational relator_length_bound(std::size_t k, const Presentation& g) {
  Rational b = trivial_bound(k);
  if (g.relators().empty()) return b;
  std::size_t shortest = SIZE_MAX;
  for (const Word& r : g.relators()) shortest = std::min(shortest, cyclic_length(r));
  return b - Rational(1, static_cast<unsigned long>(shortest));
}

BettiReport betti_report(const Presentation& g, const Chain& chain, const NormalGeneratorSpec& spec) {
  BettiReport rep = approx_sequence(g, chain);
  const std::size_t k = g.generator_count();
  rep.bounds["trivial"] = trivial_bound(k);
  rep.bounds["torsion"] = torsion_bound(spec);
  rep.bounds["relator_length"] = relator_length_bound(g);
  if (chain.p) {
    ModPBound mp = mod_p_bound(g, *chain.p);
    rep.bounds["mod_p"] = mp.value;
    if (mp.vacuous) rep.notes["mod_p"] = "vacuous (G has no p-quotient)";
  }
  rep.checks.push_back({"torsion_vs_trivial", 0, rep.bounds["torsion"], rep.bounds["trivial"],
                        rep.bounds["torsion"] <= rep.bounds["trivial"], ""});
  for (std::size_t i = 0; i < rep.approximants.size(); ++i) {
    const Approximant& a = rep.approximants[i];
    const ChainLevel& level = chain.levels[i];
    rep.checks.push_back({"shapiro", a.level, Rational(static_cast<unsigned long>(a.cohomology.dim_h1)),
                          Rational(static_cast<unsigned long>(a.cohomology.dim_h1_shapiro)),
                          a.cohomology.dim_h1 == a.cohomology.dim_h1_shapiro, "equality"});
    if (!is_prime_power(a.index)) {
      rep.notes["pi_image_level_" + std::to_string(a.level)] =
          "skipped: index " + std::to_string(a.index) + " is not a prime power";
      continue;
    }
    PiImageVerdict v = pi_image_check(g, spec, level.table, a.h1);
    rep.checks.push_back({"pi_image", a.level, v.lhs, v.rhs, v.pass, ""});
    std::string orders;
    for (const BigInt& m : v.image_orders) orders += (orders.empty() ? "" : ",") + m.get_str();
    rep.checks.push_back({"pi_image_sharp", a.level, v.lhs, v.rhs_sharp, v.pass_sharp, "image orders " + orders});
  }
  return rep;
}

}  // namespace grpcalc
