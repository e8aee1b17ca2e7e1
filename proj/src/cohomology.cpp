#include "grpcalc/cohomology.hpp"

#include <numeric>

#include "grpcalc/errors.hpp"
#include "grpcalc/fox.hpp"
#include "grpcalc/parallel.hpp"

namespace grpcalc {

IntegerMatrix exponent_matrix(const Presentation& p) {
  const auto& rels = p.relators();
  IntegerMatrix m(rels.size(), p.generator_count());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (Letter x : rels[r].letters()) m(r, x.generator) += x.sign;
  return m;
}

Abelianization abelianization(const Presentation& p) {
  SmithForm snf = smith_normal_form(exponent_matrix(p));
  Abelianization ab;
  ab.rank = p.generator_count() - snf.rank;
  for (const BigInt& d : snf.diagonal)
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

IntegerMatrix fox_jacobian(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    throw InputError("fox_jacobian: table and presentation disagree on generator count");
  const std::size_t n = t.size();
  const std::size_t k = p.generator_count();
  const auto& rels = p.relators();
  std::vector<std::vector<IntegerMatrix>> blocks(rels.size());
  parallel_for(rels.size(), [&](std::size_t r) {
    for (std::uint32_t i = 0; i < k; ++i) blocks[r].push_back(evaluate(fox_derivative(rels[r], i), t));
  });
  IntegerMatrix j(rels.size() * n, k * n);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t i = 0; i < k; ++i) j.set_block(r * n, i * n, blocks[r][i]);
  return j;
}

std::size_t cocycle_dim(const Presentation& p, const CosetTable& t) {
  return p.generator_count() * t.size() - rank_rational(fox_jacobian(p, t));
}

std::size_t coboundary_dim(const CosetTable& t) {
  std::vector<std::uint32_t> parent(t.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  std::size_t orbits = t.size();
  for (std::uint32_t g = 0; g < t.generator_count(); ++g)
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      std::uint32_t a = find(c), b = find(t.permutation(g)[c]);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --orbits;
      }
    }
  return t.size() - orbits;
}

CohomologyReport h1_dim(const Presentation& p, const CosetTable& t) {
  return h1_dim(p, t, rewrite_subgroup(p, t));
}

CohomologyReport h1_dim(const Presentation& p, const CosetTable& t, const SubgroupPresentation& h) {
  if (!relators_hold(p, t)) throw InputError("h1_dim: table is not a complete table for the presentation");
  CohomologyReport rep;
  rep.index = t.size();
  rep.jacobian_rank = rank_rational(fox_jacobian(p, t));
  rep.dim_z1 = p.generator_count() * t.size() - rep.jacobian_rank;
  rep.dim_b1 = coboundary_dim(t);
  if (rep.dim_z1 < rep.dim_b1) throw InvariantViolation("h1_dim: dim Z1 < dim B1");
  rep.dim_h1 = rep.dim_z1 - rep.dim_b1;
  rep.abelianization_of_h = abelianization(h.presentation);
  rep.dim_h1_shapiro = rep.abelianization_of_h.rank;
  rep.subgroup_generators = h.presentation.generator_count();
  rep.subgroup_relators = h.presentation.relators().size();
  if (rep.dim_h1 != rep.dim_h1_shapiro)
    throw InvariantViolation("Fox-Jacobian dim H1 = " + std::to_string(rep.dim_h1) +
                                 " but subgroup abelianization rank = " +
                                 std::to_string(rep.dim_h1_shapiro),
                             "ShapiroMismatch");
  return rep;
}

}  // namespace grpcalc
