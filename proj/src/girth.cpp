#include "grpcalc/girth.hpp"

#include <algorithm>

#include "grpcalc/cohomology.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/fox.hpp"

namespace grpcalc {

std::size_t girth_finite(const CosetTable& t) {
  const std::size_t k = t.generator_count();
  const std::size_t n = t.size();
  if (k == 0) throw InputError("girth_finite needs at least one generator");
  bool regular = true;
  try {
    regular = FiniteGroup::from_table(t, n).order() == n;
  } catch (const CapExceeded&) {
    regular = false;
  }
  if (!regular) throw InputError("girth_finite needs the regular action (trivial subgroup table)");
  // state: coset * 2k + code of the last letter
  const std::size_t codes = 2 * k;
  std::vector<std::uint32_t> dist(n * codes, 0);
  std::vector<std::size_t> queue;
  for (std::size_t code = 0; code < codes; ++code) {
    Letter x = Letter::from_code(static_cast<std::uint32_t>(code));
    std::uint32_t c = t.act(0, x);
    if (c == 0) return 1;
    std::size_t s = c * codes + code;
    if (dist[s] == 0) {
      dist[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t s = queue[i];
    const std::uint32_t c = static_cast<std::uint32_t>(s / codes);
    const Letter last = Letter::from_code(static_cast<std::uint32_t>(s % codes));
    for (std::size_t code = 0; code < codes; ++code) {
      Letter x = Letter::from_code(static_cast<std::uint32_t>(code));
      if (x == last.inverse()) continue;
      std::uint32_t d = t.act(c, x);
      if (d == 0) return dist[s] + 1;
      std::size_t next = d * codes + code;
      if (dist[next] == 0) {
        dist[next] = dist[s] + 1;
        queue.push_back(next);
      }
    }
  }
  throw InvariantViolation("girth_finite: no identity word found in a finite group");
}

std::size_t girth_finite(const FiniteGroup& g, std::span<const std::uint32_t> generators) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> forward;
  for (std::uint32_t s : generators) {
    if (s >= n) throw InputError("girth_finite: generator outside the group");
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t x = 0; x < n; ++x) perm[x] = g.multiply(x, s);
    forward.push_back(std::move(perm));
  }
  return girth_finite(CosetTable(generators.size(), std::move(forward)));
}

std::vector<Certificate> chain_certificates(const Chain& chain) {
  std::vector<Certificate> out;
  for (const ChainLevel& level : chain.levels) {
    std::string label = chain.p ? "p=" + std::to_string(*chain.p) + " " : std::string();
    label += "level " + std::to_string(level.depth) + " (index " + std::to_string(level.index_in_g) + ")";
    out.push_back({label, level.table});
  }
  return out;
}

namespace {

struct Search {
  const std::vector<Certificate>& certs;
  std::size_t k;
  std::size_t radius;
  std::size_t best;  // length of the shortest uncertified word so far, radius+1 if none
  std::optional<Word> witness;
  std::size_t checked = 0;
  std::vector<Letter> word;
  // images[c][depth] is the permutation of certificate c after `depth` letters
  std::vector<std::vector<std::vector<std::uint32_t>>> images;

  void run() {
    for (std::size_t c = 0; c < certs.size(); ++c) {
      std::vector<std::uint32_t> id(certs[c].table.size());
      for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
      images[c].assign(radius + 1, id);
    }
    dfs(0);
  }

  void dfs(std::size_t depth) {
    if (depth + 1 >= best) return;
    for (std::uint32_t code = 0; code < 2 * k; ++code) {
      Letter x = Letter::from_code(code);
      if (depth > 0 && x == word.back().inverse()) continue;
      word.push_back(x);
      bool separated = false;
      for (std::size_t c = 0; c < certs.size(); ++c) {
        const auto& prev = images[c][depth];
        auto& cur = images[c][depth + 1];
        bool moved = false;
        for (std::uint32_t i = 0; i < prev.size(); ++i) {
          cur[i] = certs[c].table.act(prev[i], x);
          moved = moved || cur[i] != i;
        }
        separated = separated || moved;
      }
      ++checked;
      if (!separated) {
        best = depth + 1;
        witness = Word(word);
        word.pop_back();
        return;
      }
      dfs(depth + 1);
      word.pop_back();
      if (depth + 1 >= best) return;
    }
  }
};

}  // namespace

GirthReport girth_interval(const Presentation& p, const std::vector<Certificate>& certificates,
                           std::size_t radius) {
  if (radius < 1) throw InputError("girth radius must be at least 1");
  const std::size_t k = p.generator_count();
  for (const Certificate& c : certificates) {
    if (c.table.generator_count() != k)
      throw InputError("certificate " + c.label + " has the wrong generator count");
    if (!relators_hold(p, c.table))
      throw InputError("certificate " + c.label + " is not a quotient of the presented group");
  }
  GirthReport rep;
  rep.radius = radius;
  for (const Certificate& c : certificates) rep.certificates.push_back(c.label);
  for (const Word& r : p.relators())
    if (!rep.upper || r.size() < *rep.upper) {
      rep.upper = r.size();
      rep.upper_witness = r;
    }
  std::size_t limit = radius;
  if (rep.upper) limit = std::min(limit, *rep.upper);
  // Relators are uncertifiable by construction, so the search never needs
  // to go beyond the shortest one.
  Search s{certificates, k, limit, limit + 1, std::nullopt, 0, {}, std::vector<std::vector<std::vector<std::uint32_t>>>(certificates.size())};
  s.run();
  rep.words_checked = s.checked;
  if (s.witness) {
    rep.lower = s.best;
    rep.uncertified = s.witness;
  } else {
    rep.lower = limit + 1;
    rep.lower_exhausted = true;
  }
  if (rep.upper && rep.lower > *rep.upper) throw InvariantViolation("girth lower bound exceeds a relator length");
  return rep;
}

GirthReport girth_interval(const Presentation& p, const Chain& chain, std::size_t radius) {
  return girth_interval(p, chain_certificates(chain), radius);
}

IneqVerdict ineq_consistency(const Presentation& p, const GirthReport& report,
                             const std::vector<Approximant>& approximants) {
  IneqVerdict v;
  v.k = p.generator_count();
  v.bound = relator_length_bound(p);
  v.note = "the inequality involves the limit value; only the relator-level form and internal consistency are checked";
  if (p.relators().empty()) {
    v.vacuous = true;
    v.sharp = true;
    v.upper_consistent = !report.upper.has_value();
    v.pass = v.upper_consistent;
  } else {
    std::size_t shortest = SIZE_MAX;
    for (const Word& r : p.relators()) shortest = std::min(shortest, cyclic_length(r));
    v.shortest_relator = shortest;
    Rational gap = Rational(static_cast<long>(v.k) - 1) - v.bound;
    v.reciprocal = Rational(1) / gap;
    v.sharp = *v.reciprocal == Rational(static_cast<unsigned long>(shortest));
    v.upper_consistent = report.upper && shortest <= *report.upper;
    v.pass = v.sharp && v.upper_consistent;
  }
  for (const Approximant& a : approximants) {
    std::string line = "level " + std::to_string(a.level) + ": " + to_string(a.normalized);
    if (report.upper) {
      Rational target = Rational(static_cast<long>(v.k) - 1) - Rational(1, static_cast<unsigned long>(*report.upper));
      line += a.normalized > target ? " exceeds " + to_string(target) + "; inconclusive at finite level"
                                    : " <= " + to_string(target) + "; consistent at finite level";
    } else {
      line += "; no finite girth upper bound";
    }
    v.level_notes.push_back(std::move(line));
  }
  return v;
}

bool Z1SupportReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Z1SupportCheck& c) { return c.pass; });
}

Z1SupportReport z1_support_bound_check(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    throw InputError("z1_support_bound_check: table and presentation disagree on generator count");
  if (!is_normal(t)) throw NonNormalTable("z1_support_bound_check requires a normal subgroup table");
  const std::size_t k = p.generator_count();
  const std::size_t n = t.size();
  Z1SupportReport rep;
  rep.index = n;
  rep.dim_z1 = cocycle_dim(p, t);
  rep.vacuous = p.relators().empty();
  const Rational kn(static_cast<unsigned long>(k * n));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::uint32_t i = 0; i < k; ++i) {
      FreeRingElement d = fox_derivative(p.relators()[r], i);
      if (d.is_zero() || evaluate(d, t).is_zero()) {
        rep.skipped.emplace_back(r, i);
        continue;
      }
      Z1SupportCheck c;
      c.relator = r;
      c.generator = i;
      c.support = support_size(d);
      c.bound = kn - Rational(static_cast<unsigned long>(n), static_cast<unsigned long>(c.support));
      c.bound.canonicalize();
      c.dim_z1 = rep.dim_z1;
      const Rational z(static_cast<unsigned long>(rep.dim_z1));
      c.pass = z <= c.bound;
      c.equality = z == c.bound;
      rep.checks.push_back(std::move(c));
    }
  return rep;
}

}  // namespace grpcalc
