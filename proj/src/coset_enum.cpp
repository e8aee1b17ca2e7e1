#include "grpcalc/coset_enum.hpp"

#include <algorithm>
#include <string>

#include "grpcalc/errors.hpp"

namespace grpcalc {

CosetTable::CosetTable(std::size_t generator_count,
                       std::vector<std::vector<std::uint32_t>> forward,
                       std::vector<Word> subgroup_words)
    : forward_(std::move(forward)), subgroup_words_(std::move(subgroup_words)) {
  if (generator_count == 0 || forward_.size() != generator_count)
    throw InputError("coset table: generator count mismatch");
  size_ = forward_.front().size();
  if (size_ == 0) throw InputError("coset table must have at least one coset");
  inverse_.assign(generator_count, std::vector<std::uint32_t>(size_, 0));
  for (std::size_t g = 0; g < generator_count; ++g) {
    if (forward_[g].size() != size_) throw InputError("coset table: ragged permutations");
    std::vector<bool> hit(size_, false);
    for (std::uint32_t c = 0; c < size_; ++c) {
      std::uint32_t d = forward_[g][c];
      if (d >= size_ || hit[d]) throw InputError("coset table: generator action is not a bijection");
      hit[d] = true;
      inverse_[g][d] = c;
    }
  }
  for (const Word& w : subgroup_words_)
    if (w.max_generator_bound() > generator_count)
      throw InputError("coset table: subgroup word uses an unknown generator");
  // transitivity
  std::vector<bool> seen(size_, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::size_t g = 0; g < generator_count; ++g)
      for (std::uint32_t d : {forward_[g][queue[qi]], inverse_[g][queue[qi]]})
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
  if (queue.size() != size_) throw InputError("coset table: action is not transitive");
}

CosetTable CosetTable::trivial(std::size_t generator_count) {
  return CosetTable(generator_count, std::vector<std::vector<std::uint32_t>>(generator_count, {0}));
}

CosetTable CosetTable::with_subgroup_words(std::vector<Word> words) const {
  CosetTable t = *this;
  for (const Word& w : words)
    if (w.max_generator_bound() > generator_count())
      throw InputError("coset table: subgroup word uses an unknown generator");
  t.subgroup_words_ = std::move(words);
  return t;
}

std::uint32_t trace(const CosetTable& t, const Word& w, std::uint32_t start) {
  std::uint32_t c = start;
  for (Letter x : w.letters()) c = t.act(c, x);
  return c;
}

std::vector<std::uint32_t> word_permutation(const CosetTable& t, const Word& w) {
  std::vector<std::uint32_t> out(t.size());
  for (std::uint32_t c = 0; c < t.size(); ++c) out[c] = trace(t, w, c);
  return out;
}

IntegerMatrix permutation_matrix(const CosetTable& t, std::uint32_t g, int sign) {
  if (g >= t.generator_count()) throw InputError("permutation_matrix: generator out of range");
  IntegerMatrix m(t.size(), t.size());
  Letter x{g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  for (std::uint32_t c = 0; c < t.size(); ++c) m(t.act(c, x), c) = 1;
  return m;
}

CosetTable standardize(const CosetTable& t) {
  const std::size_t n = t.size();
  const std::size_t k = t.generator_count();
  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> renumber(n, unset), order;
  renumber[0] = 0;
  order.push_back(0);
  for (std::size_t qi = 0; qi < order.size(); ++qi)
    for (std::uint32_t code = 0; code < 2 * k; ++code) {
      std::uint32_t d = t.act(order[qi], Letter::from_code(code));
      if (renumber[d] == unset) {
        renumber[d] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
      }
    }
  if (order.size() != n) throw InvariantViolation("standardize: table is not transitive");
  std::vector<std::vector<std::uint32_t>> forward(k, std::vector<std::uint32_t>(n));
  for (std::size_t g = 0; g < k; ++g)
    for (std::uint32_t c = 0; c < n; ++c) forward[g][renumber[c]] = renumber[t.permutation(static_cast<std::uint32_t>(g))[c]];
  return CosetTable(k, std::move(forward), t.subgroup_words());
}

bool relators_hold(const Presentation& p, const CosetTable& t) {
  for (const Word& r : p.relators())
    for (std::uint32_t c = 0; c < t.size(); ++c)
      if (trace(t, r, c) != c) return false;
  return true;
}

bool is_normal(const CosetTable& t) {
  for (const Word& w : t.subgroup_words())
    for (std::uint32_t c = 0; c < t.size(); ++c)
      if (trace(t, w, c) != c) return false;
  return true;
}

// ----------------------------------------------------------------------------
// Todd-Coxeter

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup, std::size_t cap)
      : k_(p.generator_count()), cols_(2 * p.generator_count()), cap_(cap) {
    for (const Word& r : p.relators()) relators_.push_back(codes(r));
    for (const Word& w : subgroup) {
      if (w.max_generator_bound() > k_) throw InputError("subgroup word uses an unknown generator");
      if (!w.empty()) subgroup_.push_back(codes(w));
    }
  }

  CosetTable run() {
    if (cap_ < 1) throw InputError("max_cosets must be at least 1");
    new_coset();
    std::size_t alpha = 0;
    while (true) {
      bool full = false;
      for (const auto& w : subgroup_)
        if (!scan_and_fill(0, w)) {
          full = true;
          break;
        }
      if (!full) break;
      make_room(alpha);
    }
    alpha = 0;
    while (alpha < allocated()) {
      if (live(alpha)) {
        bool full = false;
        for (const auto& r : relators_) {
          if (!scan_and_fill(static_cast<std::uint32_t>(alpha), r)) {
            full = true;
            break;
          }
          if (!live(alpha)) break;
        }
        if (!full && live(alpha))
          for (std::uint32_t x = 0; x < cols_; ++x)
            if (cell(alpha, x) == undefined && !define(static_cast<std::uint32_t>(alpha), x)) {
              full = true;
              break;
            }
        if (full) {
          make_room(alpha);
          continue;
        }
      }
      ++alpha;
    }
    compact(alpha);
    std::vector<std::vector<std::uint32_t>> forward(k_, std::vector<std::uint32_t>(allocated()));
    for (std::size_t c = 0; c < allocated(); ++c)
      for (std::size_t g = 0; g < k_; ++g) forward[g][c] = static_cast<std::uint32_t>(cell(c, 2 * g));
    return CosetTable(k_, std::move(forward));
  }

 private:
  static constexpr std::int64_t undefined = -1;

  static std::vector<std::uint32_t> codes(const Word& w) {
    std::vector<std::uint32_t> out;
    for (Letter x : w.letters()) out.push_back(x.code());
    return out;
  }
  static std::uint32_t inv(std::uint32_t x) { return x ^ 1U; }

  std::size_t allocated() const { return parent_.size(); }
  std::int64_t& cell(std::size_t c, std::uint32_t x) { return table_[c * cols_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == c; }

  void new_coset() {
    parent_.push_back(static_cast<std::uint32_t>(allocated()));
    table_.resize(table_.size() + cols_, undefined);
  }

  bool define(std::uint32_t c, std::uint32_t x) {
    if (allocated() >= cap_) return false;
    auto n = static_cast<std::uint32_t>(allocated());
    new_coset();
    cell(c, x) = n;
    cell(n, inv(x)) = c;
    return true;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    std::uint32_t ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    std::uint32_t lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[hi] = lo;
    queue_.push_back(hi);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::uint32_t g = queue_[qi];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::int64_t d = cell(g, x);
        if (d == undefined) continue;
        cell(static_cast<std::size_t>(d), inv(x)) = undefined;
        std::uint32_t mu = rep(g), nu = rep(static_cast<std::uint32_t>(d));
        if (cell(mu, x) != undefined) {
          merge(nu, static_cast<std::uint32_t>(cell(mu, x)));
        } else if (cell(nu, inv(x)) != undefined) {
          merge(mu, static_cast<std::uint32_t>(cell(nu, inv(x))));
        } else {
          cell(mu, x) = nu;
          cell(nu, inv(x)) = mu;
        }
      }
    }
  }

  // Returns false when a definition was needed but no slot was available.
  bool scan_and_fill(std::uint32_t alpha, const std::vector<std::uint32_t>& w) {
    return scan_impl(alpha, w, true);
  }
  void scan(std::uint32_t alpha, const std::vector<std::uint32_t>& w) { scan_impl(alpha, w, false); }

  bool scan_impl(std::uint32_t alpha, const std::vector<std::uint32_t>& w, bool fill) {
    const auto r = static_cast<std::ptrdiff_t>(w.size());
    std::uint32_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = r - 1;
    while (true) {
      while (i < r && cell(f, w[i]) != undefined) {
        f = static_cast<std::uint32_t>(cell(f, w[i]));
        ++i;
      }
      if (i == r) {
        if (f != alpha) coincidence(f, alpha);
        return true;
      }
      while (j >= i && cell(b, inv(w[j])) != undefined) {
        b = static_cast<std::uint32_t>(cell(b, inv(w[j])));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        cell(f, w[i]) = b;
        cell(b, inv(w[i])) = f;
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[i])) return false;
    }
  }

  // Lookahead pass followed by compaction; throws if nothing was recovered.
  void make_room(std::size_t& alpha) {
    for (std::size_t c = 0; c < allocated(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators_) {
        scan(static_cast<std::uint32_t>(c), r);
        if (!live(c)) break;
      }
    }
    for (const auto& w : subgroup_) scan(0, w);
    compact(alpha);
    if (allocated() >= cap_) throw CosetLimitExceeded(cap_);
  }

  void compact(std::size_t& alpha) {
    std::vector<std::int64_t> renumber(allocated(), undefined);
    std::size_t next = 0;
    std::size_t new_alpha = SIZE_MAX;
    for (std::size_t c = 0; c < allocated(); ++c) {
      if (!live(c)) continue;
      if (c >= alpha && new_alpha == SIZE_MAX) new_alpha = next;
      renumber[c] = static_cast<std::int64_t>(next++);
    }
    std::vector<std::int64_t> table(next * cols_, undefined);
    for (std::size_t c = 0; c < allocated(); ++c) {
      if (renumber[c] == undefined) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::int64_t d = cell(c, x);
        table[static_cast<std::size_t>(renumber[c]) * cols_ + x] =
            d == undefined ? undefined : renumber[rep(static_cast<std::uint32_t>(d))];
      }
    }
    table_ = std::move(table);
    parent_.resize(next);
    for (std::size_t c = 0; c < next; ++c) parent_[c] = static_cast<std::uint32_t>(c);
    alpha = new_alpha == SIZE_MAX ? next : new_alpha;
  }

  std::size_t k_;
  std::uint32_t cols_;
  std::size_t cap_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::int64_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace

CosetTable enumerate(const Presentation& p, std::span<const Word> subgroup, std::size_t max_cosets) {
  CosetTable raw = Enumerator(p, subgroup, max_cosets).run();
  std::vector<Word> words(subgroup.begin(), subgroup.end());
  CosetTable t = standardize(raw.with_subgroup_words(std::move(words)));
  if (!relators_hold(p, t)) throw InvariantViolation("coset enumeration: relator does not close");
  for (const Word& w : t.subgroup_words())
    if (trace(t, w, 0) != 0) throw InvariantViolation("coset enumeration: subgroup word moves coset 0");
  return t;
}

// ----------------------------------------------------------------------------
// Reidemeister-Schreier

SubgroupPresentation rewrite_subgroup(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    throw InputError("rewrite_subgroup: table and presentation disagree on generator count");
  const std::size_t n = t.size();
  const std::size_t k = p.generator_count();
  SubgroupPresentation sp{Presentation({"x"}, {}), {}, {}, {}, {}, 0};
  sp.transversal.assign(n, Word());
  std::vector<bool> reached(n, false);
  std::vector<bool> tree(n * k, false);  // (c, g) is a trivial Schreier generator
  std::vector<std::uint32_t> order{0};
  reached[0] = true;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    std::uint32_t c = order[qi];
    for (std::uint32_t code = 0; code < 2 * k; ++code) {
      Letter x = Letter::from_code(code);
      std::uint32_t d = t.act(c, x);
      if (reached[d]) continue;
      reached[d] = true;
      order.push_back(d);
      sp.transversal[d] = sp.transversal[c] * Word({x});
      if (x.sign > 0)
        tree[c * k + x.generator] = true;
      else
        tree[d * k + x.generator] = true;
    }
  }
  if (order.size() != n) throw InvariantViolation("rewrite_subgroup: table is not transitive");

  std::vector<std::string> names;
  sp.index.assign(n * k, std::nullopt);
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t g = 0; g < k; ++g) {
      if (tree[c * k + g]) {
        ++sp.eliminated_tree_edges;
        continue;
      }
      sp.index[c * k + g] = static_cast<std::uint32_t>(sp.schreier.size());
      sp.schreier.push_back({c, g});
      names.push_back("x" + std::to_string(c) + "_" + p.name(g));
      std::uint32_t d = t.act(c, Letter{g, 1});
      sp.inclusion.push_back(sp.transversal[c] * Word::generator(g) * sp.transversal[d].inverse());
    }

  // N*k - (N-1) >= 1 generators always survive
  if (names.empty()) throw InvariantViolation("rewrite_subgroup: no Schreier generators");

  std::vector<Word> relators;
  SubgroupPresentation partial = sp;
  partial.presentation = Presentation(names, {});
  for (std::uint32_t c = 0; c < n; ++c)
    for (const Word& r : p.relators()) relators.push_back(rewrite_word(partial, t, r, c));
  sp.presentation = Presentation(std::move(names), std::move(relators));
  return sp;
}

Word rewrite_word(const SubgroupPresentation& sp, const CosetTable& t, const Word& w,
                  std::uint32_t start) {
  const std::size_t k = t.generator_count();
  std::vector<Letter> out;
  std::uint32_t c = start;
  for (Letter x : w.letters()) {
    if (x.sign > 0) {
      if (auto h = sp.index[c * k + x.generator]) out.push_back({*h, 1});
      c = t.act(c, x);
    } else {
      std::uint32_t d = t.act(c, x);
      if (auto h = sp.index[d * k + x.generator]) out.push_back({*h, -1});
      c = d;
    }
  }
  if (c != start) throw InputError("rewrite_word: word does not return to its start coset");
  return Word(out);
}

}  // namespace grpcalc
