#include "grpcalc/groupring.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "grpcalc/errors.hpp"
#include "grpcalc/parallel.hpp"

namespace grpcalc {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<std::uint32_t> inverses_of(const std::vector<std::vector<std::uint32_t>>& mul) {
  const std::size_t n = mul.size();
  std::vector<std::uint32_t> inv(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto it = std::find(mul[a].begin(), mul[a].end(), 0u);
    if (it == mul[a].end()) throw InputError("multiplication table: element " + std::to_string(a) + " has no inverse");
    inv[a] = static_cast<std::uint32_t>(it - mul[a].begin());
  }
  return inv;
}

std::vector<std::uint32_t> greedy_generators(const std::vector<std::vector<std::uint32_t>>& mul) {
  const std::size_t n = mul.size();
  std::vector<bool> in(n, false);
  in[0] = true;
  std::size_t covered = 1;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t cand = 1; cand < n && covered < n; ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t x = 0; x < n; ++x)
      if (in[x]) queue.push_back(x);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::uint32_t g : gens) {
        std::uint32_t y = mul[queue[i]][g];
        if (!in[y]) {
          in[y] = true;
          ++covered;
          queue.push_back(y);
        }
      }
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_multiplication_table(std::vector<std::vector<std::uint32_t>> mul,
                                                   std::size_t associativity_samples) {
  const std::size_t n = mul.size();
  if (n == 0) throw InputError("multiplication table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[a].size() != n) throw InputError("multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (std::uint32_t x : mul[a]) {
      if (x >= n) throw InputError("multiplication table entry out of range");
      if (seen[x]) throw InputError("multiplication table row " + std::to_string(a) + " is not a permutation");
      seen[x] = true;
    }
  }
  for (std::uint32_t x = 0; x < n; ++x)
    if (mul[0][x] != x || mul[x][0] != x) throw InputError("element 0 is not the identity");
  auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
      throw InputError("multiplication table is not associative");
  };
  if (n <= 16) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t s = 0; s < associativity_samples; ++s)
      assoc(static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n),
            static_cast<std::uint32_t>(rng() % n));
  }
  FiniteGroup g;
  g.inv_ = inverses_of(mul);
  g.generators_ = greedy_generators(mul);
  g.mul_ = std::move(mul);
  g.provenance_ = "table";
  return g;
}

FiniteGroup FiniteGroup::from_table(const CosetTable& t, std::size_t max_order) {
  const std::size_t k = t.generator_count();
  const std::size_t n = t.size();
  std::vector<std::vector<std::uint32_t>> elements;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> parent, parent_gen;
  std::vector<std::uint32_t> identity(n);
  for (std::uint32_t i = 0; i < n; ++i) identity[i] = i;
  elements.push_back(identity);
  index.emplace(identity, 0);
  parent.push_back(0);
  parent_gen.push_back(0);
  // right[e][g] = e followed by g
  std::vector<std::vector<std::uint32_t>> right;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    right.emplace_back(k);
    for (std::uint32_t g = 0; g < k; ++g) {
      const auto& perm = t.permutation(g);
      std::vector<std::uint32_t> next(n);
      for (std::size_t x = 0; x < n; ++x) next[x] = perm[elements[i][x]];
      auto [it, fresh] = index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      if (fresh) {
        if (elements.size() >= max_order)
          throw CapExceeded("OrderCapExceeded", "permutation group order exceeds " + std::to_string(max_order));
        elements.push_back(std::move(next));
        parent.push_back(static_cast<std::uint32_t>(i));
        parent_gen.push_back(g);
      }
      right[i][g] = it->second;
    }
  }
  const std::size_t order = elements.size();
  std::vector<std::vector<std::uint32_t>> mul(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a) {
    mul[a][0] = a;
    for (std::uint32_t b = 1; b < order; ++b) mul[a][b] = right[mul[a][parent[b]]][parent_gen[b]];
  }
  FiniteGroup grp;
  grp.inv_ = inverses_of(mul);
  grp.mul_ = std::move(mul);
  grp.generators_.resize(k);
  for (std::uint32_t g = 0; g < k; ++g) grp.generators_[g] = right[0][g];
  grp.provenance_ = "coset_table";
  return grp;
}

void RingElement::add(std::uint32_t g, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

RationalMatrix left_multiplication_matrix(const FiniteGroup& g, const RingElement& f) {
  const std::size_t n = g.order();
  RationalMatrix m(n, n);
  for (const auto& [elem, coeff] : f.coefficients()) {
    if (elem >= n) throw InputError("ring element uses an element outside the group");
    for (std::uint32_t h = 0; h < n; ++h) m(g.multiply(elem, h), h) += coeff;
  }
  return m;
}

UncertaintyResult uncertainty_check(const FiniteGroup& g, const RingElement& f) {
  if (f.is_zero()) throw InputError("uncertainty check needs a nonzero element", "ZeroElement");
  UncertaintyResult r;
  r.order = g.order();
  r.support = f.support();
  r.rank = rank_rational(left_multiplication_matrix(g, f).clear_denominators());
  r.pass = r.rank * r.support >= r.order;
  r.equality = r.rank * r.support == r.order;
  return r;
}

namespace {

struct SweepSlot {
  std::size_t checked = 0, violations = 0, equalities = 0;
  std::optional<RingElement> counterexample;
};

UncertaintySweep merge(std::vector<SweepSlot>& slots) {
  UncertaintySweep s;
  for (auto& slot : slots) {
    s.checked += slot.checked;
    s.violations += slot.violations;
    s.equalities += slot.equalities;
    if (!s.counterexample && slot.counterexample) s.counterexample = std::move(slot.counterexample);
  }
  return s;
}

void record(SweepSlot& slot, const FiniteGroup& g, const RingElement& f) {
  UncertaintyResult r = uncertainty_check(g, f);
  ++slot.checked;
  if (r.equality) ++slot.equalities;
  if (!r.pass) {
    ++slot.violations;
    if (!slot.counterexample) slot.counterexample = f;
  }
}

}  // namespace

UncertaintySweep exhaustive_uncertainty(const FiniteGroup& g, std::size_t max_support,
                                        std::span<const long> coefficients) {
  if (coefficients.empty()) throw InputError("coefficient set is empty");
  if (std::find(coefficients.begin(), coefficients.end(), 0L) != coefficients.end())
    throw InputError("coefficient set must not contain 0");
  const std::size_t n = g.order();
  max_support = std::min(max_support, n);
  std::vector<std::vector<std::uint32_t>> supports;
  for (std::size_t s = 1; s <= max_support; ++s) {
    std::vector<std::uint32_t> c(s);
    for (std::uint32_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
      supports.push_back(c);
      std::size_t i = s;
      while (i > 0 && c[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  std::vector<SweepSlot> slots(supports.size());
  parallel_for(supports.size(), [&](std::size_t idx) {
    const auto& sup = supports[idx];
    std::vector<std::size_t> digit(sup.size(), 0);
    while (true) {
      RingElement f;
      for (std::size_t j = 0; j < sup.size(); ++j) f.add(sup[j], Rational(coefficients[digit[j]]));
      record(slots[idx], g, f);
      std::size_t j = 0;
      while (j < digit.size() && ++digit[j] == coefficients.size()) digit[j++] = 0;
      if (j == digit.size()) break;
    }
  });
  return merge(slots);
}

RingElement random_element(const FiniteGroup& g, std::uint64_t seed, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t n = g.order();
  RingElement f;
  while (f.is_zero()) {
    const std::size_t support = 1 + rng() % n;
    for (std::size_t j = 0; j < support; ++j) {
      long c = static_cast<long>(rng() % 7) - 3;
      f.add(static_cast<std::uint32_t>(rng() % n), Rational(c));
    }
  }
  return f;
}

UncertaintySweep random_uncertainty(const FiniteGroup& g, std::size_t samples, std::uint64_t seed) {
  std::vector<SweepSlot> slots(samples);
  parallel_for(samples, [&](std::size_t i) { record(slots[i], g, random_element(g, seed, i)); });
  return merge(slots);
}

AugmentationChain augmentation_powers_mod_p(const FiniteGroup& g, std::uint64_t p, std::size_t max_depth) {
  if (!is_prime(p) || p >= (1ull << 31)) throw InputError("p must be a prime below 2^31");
  if (max_depth < 1) throw InputError("max_depth must be at least 1");
  const std::size_t n = g.order();
  AugmentationChain chain;
  chain.p = p;
  std::vector<std::vector<std::uint64_t>> basis;
  {
    ModPBasis b(n, p);
    for (std::uint32_t x = 1; x < n; ++x) {
      std::vector<std::uint64_t> v(n, 0);
      v[x] = 1;
      v[0] = p - 1;
      b.insert(std::move(v));
    }
    basis = b.rows();
  }
  chain.dims.push_back(basis.size());
  if (basis.empty()) {
    chain.reached_zero = true;
    chain.terminal_power = 1;
    return chain;
  }
  for (std::size_t power = 2; power <= max_depth + 1; ++power) {
    if (power > max_depth) throw DepthExceeded(max_depth, chain.dims);
    ModPBasis next(n, p);
    for (std::uint32_t x = 1; x < n && next.rank() < basis.size(); ++x)
      for (const auto& v : basis) {
        std::vector<std::uint64_t> w(n, 0);
        for (std::uint32_t h = 0; h < n; ++h) {
          if (v[h] == 0) continue;
          std::uint32_t xh = g.multiply(x, h);
          w[xh] = (w[xh] + v[h]) % p;
          w[h] = (w[h] + p - v[h]) % p;
        }
        next.insert(std::move(w));
      }
    const std::size_t dim = next.rank();
    if (dim > chain.dims.back()) throw InvariantViolation("augmentation powers increased in dimension");
    if (dim == chain.dims.back()) {
      chain.terminal_power = power - 1;
      return chain;
    }
    chain.dims.push_back(dim);
    if (dim == 0) {
      chain.reached_zero = true;
      chain.terminal_power = power;
      return chain;
    }
    basis = next.rows();
  }
  return chain;
}

bool p_group_verdict(const FiniteGroup& g, std::uint64_t p) {
  AugmentationChain chain = augmentation_powers_mod_p(g, p, g.order() + 1);
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  const bool expected = n == 1;
  if (chain.reached_zero != expected)
    throw InvariantViolation("augmentation nilpotence disagrees with the group order " + std::to_string(g.order()));
  return chain.reached_zero;
}

std::vector<IntegerAugmentationLevel> augmentation_powers_integer(const FiniteGroup& g, std::size_t max_depth) {
  const std::size_t n = g.order();
  std::vector<IntegerAugmentationLevel> out;
  IntegerMatrix gens(n == 0 ? 0 : n - 1, n);
  for (std::uint32_t x = 1; x < n; ++x) {
    gens(x - 1, x) = 1;
    gens(x - 1, 0) = -1;
  }
  IntegerMatrix basis = hermite_basis(gens);
  out.push_back({1, basis.rows(), basis, {}, 0});
  for (std::size_t power = 2; power <= max_depth; ++power) {
    IntegerMatrix prod(basis.rows() * (n - 1), n);
    std::size_t row = 0;
    for (std::uint32_t x = 1; x < n; ++x)
      for (std::size_t r = 0; r < basis.rows(); ++r, ++row)
        for (std::uint32_t h = 0; h < n; ++h) {
          const BigInt& c = basis(r, h);
          if (c == 0) continue;
          prod(row, g.multiply(x, h)) += c;
          prod(row, h) -= c;
        }
    IntegerMatrix next = hermite_basis(prod);
    IntegerAugmentationLevel level;
    level.power = power;
    level.rank = next.rows();
    level.basis = next;
    SmithForm snf = smith_normal_form(lattice_coordinates(basis, next));
    level.divisors_in_previous = snf.diagonal;
    if (snf.rank == basis.rows()) {
      level.index_in_previous = 1;
      for (const BigInt& d : snf.diagonal) level.index_in_previous *= d;
    }
    out.push_back(std::move(level));
    basis = std::move(next);
  }
  return out;
}

}  // namespace grpcalc
