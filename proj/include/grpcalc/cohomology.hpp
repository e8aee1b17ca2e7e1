#pragma once

#include <cstddef>
#include <vector>

#include "grpcalc/coset_enum.hpp"
#include "grpcalc/exact_linalg.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc {

struct Abelianization {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

/// |relators| x k matrix of exponent sums.
IntegerMatrix exponent_matrix(const Presentation& p);

Abelianization abelianization(const Presentation& p);

/// (|relators| * N) x (k * N) matrix whose (r, i) block is the left action of
/// the Fox derivative d_i(r) on Q[G/H].
IntegerMatrix fox_jacobian(const Presentation& p, const CosetTable& t);

/// dim Z^1(G, Q[G/H]) = k*N - rank(J).
std::size_t cocycle_dim(const Presentation& p, const CosetTable& t);

/// dim B^1(G, Q[G/H]) = N - (number of orbits).
std::size_t coboundary_dim(const CosetTable& t);

struct CohomologyReport {
  std::size_t index = 0;
  std::size_t dim_z1 = 0;
  std::size_t dim_b1 = 0;
  std::size_t dim_h1 = 0;
  std::size_t dim_h1_shapiro = 0;
  std::size_t jacobian_rank = 0;
  std::size_t subgroup_generators = 0;
  std::size_t subgroup_relators = 0;
  Abelianization abelianization_of_h;
};

/// H^1(G, Q[G/H]) by the Fox Jacobian, cross-checked against the rank of the
/// abelianized Reidemeister-Schreier presentation of H (Shapiro's lemma).
/// Throws InvariantViolation("ShapiroMismatch") if the two disagree.
CohomologyReport h1_dim(const Presentation& p, const CosetTable& t);

/// Same, reusing an already computed subgroup presentation.
CohomologyReport h1_dim(const Presentation& p, const CosetTable& t, const SubgroupPresentation& h);

}  // namespace grpcalc
