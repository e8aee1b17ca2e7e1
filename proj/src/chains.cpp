#include "grpcalc/chains.hpp"

#include <algorithm>

#include "grpcalc/cohomology.hpp"
#include "grpcalc/exact_linalg.hpp"

namespace grpcalc {

std::string to_string(Truncation t) {
  switch (t) {
    case Truncation::none: return "none";
    case Truncation::depth_cap: return "depth_cap";
    case Truncation::index_cap: return "index_cap";
    case Truncation::stabilized: return "stabilized";
  }
  return "unknown";
}

ModPQuotient mod_p_quotient_map(const Presentation& p, std::uint64_t prime) {
  const std::size_t k = p.generator_count();
  IntegerMatrix e = exponent_matrix(p);
  // rank_mod_p validates the prime
  rank_mod_p(IntegerMatrix(0, k), prime);
  ModPBasis basis(k, prime);
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::vector<std::uint64_t> v(k);
    for (std::size_t c = 0; c < k; ++c) v[c] = mpz_fdiv_ui(e(r, c).get_mpz_t(), static_cast<unsigned long>(prime));
    basis.insert(std::move(v));
  }
  // full reduction: clear every pivot column in all other rows
  auto rows = basis.rows();
  std::vector<std::size_t> pivot(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    pivot[i] = static_cast<std::size_t>(std::find_if(rows[i].begin(), rows[i].end(), [](auto x) { return x != 0; }) - rows[i].begin());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j || rows[j][pivot[i]] == 0) continue;
      std::uint64_t f = rows[j][pivot[i]];
      for (std::size_t c = 0; c < k; ++c) rows[j][c] = (rows[j][c] + (prime - f) * rows[i][c]) % prime;
    }
  std::vector<std::ptrdiff_t> row_of(k, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[pivot[i]] = static_cast<std::ptrdiff_t>(i);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < k; ++c)
    if (row_of[c] < 0) free_cols.push_back(c);

  ModPQuotient q;
  q.p = prime;
  q.dimension = free_cols.size();
  q.images.assign(k, std::vector<std::uint64_t>(q.dimension, 0));
  for (std::size_t g = 0; g < k; ++g) {
    if (row_of[g] < 0) {
      auto pos = std::find(free_cols.begin(), free_cols.end(), g) - free_cols.begin();
      q.images[g][static_cast<std::size_t>(pos)] = 1;
    } else {
      const auto& row = rows[static_cast<std::size_t>(row_of[g])];
      for (std::size_t j = 0; j < free_cols.size(); ++j) q.images[g][j] = (prime - row[free_cols[j]]) % prime;
    }
  }
  return q;
}

ChainLevel base_level(const Presentation& g) {
  CosetTable t = CosetTable::trivial(g.generator_count());
  SubgroupPresentation h = rewrite_subgroup(g, t);
  return ChainLevel{0, 1, t.with_subgroup_words(h.inclusion), std::move(h)};
}

ChainLevel next_level(const Presentation& g, const ChainLevel& previous, std::uint64_t prime,
                      std::size_t max_index) {
  const SubgroupPresentation& h = previous.subgroup;
  const ModPQuotient q = mod_p_quotient_map(h.presentation, prime);
  const std::size_t d = q.dimension;
  if (d == 0) throw Stabilized(previous.depth);

  const std::size_t n = previous.table.size();
  const std::size_t k = g.generator_count();
  std::size_t layers = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (layers > max_index / prime || layers * prime > max_index / n) {
      BigInt full = BigInt(static_cast<unsigned long>(n));
      for (std::size_t j = 0; j < d; ++j) full *= static_cast<unsigned long>(prime);
      throw IndexCapExceeded(full.get_str(), max_index);
    }
    layers *= prime;
  }

  auto digits = [&](std::size_t code) {
    std::vector<std::uint64_t> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = code % prime;
      code /= prime;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint64_t>& v) {
    std::size_t code = 0;
    for (std::size_t i = d; i-- > 0;) code = code * prime + v[i];
    return code;
  };

  std::vector<std::vector<std::uint32_t>> forward(k, std::vector<std::uint32_t>(n * layers));
  for (std::size_t code = 0; code < layers; ++code) {
    const auto v = digits(code);
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t gen = 0; gen < k; ++gen) {
        std::vector<std::uint64_t> w = v;
        if (auto x = h.generator_of(c, gen, k)) {
          const auto& img = q.images[*x];
          for (std::size_t i = 0; i < d; ++i) w[i] = (w[i] + img[i]) % prime;
        }
        const std::uint32_t target = previous.table.permutation(gen)[c];
        forward[gen][code * n + c] = static_cast<std::uint32_t>(encode(w) * n + target);
      }
  }
  CosetTable table = standardize(CosetTable(k, std::move(forward)));
  if (!relators_hold(g, table)) throw InvariantViolation("chain level table violates a relator");
  SubgroupPresentation sub = rewrite_subgroup(g, table);
  ChainLevel level{previous.depth + 1, n * layers, table.with_subgroup_words(sub.inclusion), std::move(sub)};
  return level;
}

ChainLevel step(const Presentation& g, std::uint64_t prime, std::size_t max_index) {
  return next_level(g, base_level(g), prime, max_index);
}

Chain derived_p_chain(const Presentation& g, std::uint64_t prime, std::size_t depth,
                      std::size_t max_index) {
  if (depth < 1) throw InputError("chain depth must be at least 1");
  Chain chain;
  chain.p = prime;
  ChainLevel current = base_level(g);
  for (std::size_t i = 0; i < depth; ++i) {
    try {
      ChainLevel next = next_level(g, current, prime, max_index);
      chain.levels.push_back(next);
      current = std::move(next);
    } catch (const Stabilized& e) {
      chain.truncation = Truncation::stabilized;
      chain.reason = e.what();
      return chain;
    } catch (const IndexCapExceeded& e) {
      chain.truncation = Truncation::index_cap;
      chain.reason = e.what();
      return chain;
    }
  }
  chain.truncation = Truncation::depth_cap;
  chain.reason = "depth cap " + std::to_string(depth) + " reached";
  return chain;
}

Chain explicit_chain(const Presentation& g, const std::vector<std::vector<Word>>& subgroups,
                     std::size_t max_cosets) {
  Chain chain;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    CosetTable t = enumerate(g, subgroups[i], max_cosets);
    if (!is_normal(t)) throw InputError("chain level " + std::to_string(i + 1) + " is not a normal subgroup");
    if (!chain.levels.empty()) {
      const CosetTable& prev = chain.levels.back().table;
      for (const Word& w : subgroups[i])
        if (trace(prev, w, 0) != 0)
          throw InputError("chain level " + std::to_string(i + 1) + " is not contained in the previous level");
    }
    SubgroupPresentation sub = rewrite_subgroup(g, t);
    chain.levels.push_back(ChainLevel{i + 1, t.size(), t, std::move(sub)});
  }
  chain.truncation = Truncation::depth_cap;
  chain.reason = "user-supplied chain";
  return chain;
}

}  // namespace grpcalc
