// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support.hpp"
#include "grpcalc/betti_bounds.hpp"
#include "grpcalc/chains.hpp"
#include "grpcalc/cli.hpp"
#include "grpcalc/cohomology.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/fox.hpp"
#include "grpcalc/girth.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/report.hpp"

using namespace grpcalc;
using grpcalc::testing::corpus;
using grpcalc::testing::corpus_path;
using grpcalc::testing::finite;
using grpcalc::testing::pres;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string cli_output(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::vector<Rational> normalized(const Presentation& g, const Chain& c) {
  std::vector<Rational> out;
  for (const Approximant& a : approx_sequence(g, c).approximants) out.push_back(a.normalized);
  return out;
}

bool is_power_of(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Chain> corpus_chains(const Presentation& g) {
  std::vector<Chain> out;
  for (std::uint64_t p : {2u, 3u}) out.push_back(derived_p_chain(g, p, 3, 2000));
  return out;
}

void criterion1(Verdict& v) {
  report::Json j = report::Json::parse(cli_output({"bounds", "--summands", "0:2,0:3"}));
  const std::string fp = j["bounds"]["free_product"];
  std::vector<Order> orders{Order::finite(2), Order::finite(3)};
  const Rational t = torsion_bound(orders);
  v.detail << "free_product " << fp << ", torsion_bound(2,3) " << t.get_str();
  v.require(fp == "1/6", "free product value");
  v.require(t == Rational(1, 6), "torsion bound value");
}

void criterion2(Verdict& v) {
  Presentation f2 = corpus("f2.grp"), f3 = corpus("f3.grp");
  Chain c2 = derived_p_chain(f2, 2, 2);
  Chain c3 = derived_p_chain(f3, 2, 1);
  auto a = normalized(f2, c2);
  auto b = normalized(f3, c3);
  v.detail << "F2: ";
  for (const auto& q : a) v.detail << q.get_str() << " ";
  v.detail << "F3: ";
  for (const auto& q : b) v.detail << q.get_str() << " ";
  v.require(a == std::vector<Rational>{Rational(5, 4), Rational(129, 128)}, "F2 approximants");
  v.require(b == std::vector<Rational>{Rational(17, 8)} && c3.levels[0].index_in_g == 8, "F3 approximant");
  for (const Chain* c : {&c2, &c3})
    for (const ChainLevel& l : c->levels) {
      const std::size_t k = c == &c2 ? 2 : 3;
      v.require(l.subgroup.presentation.generator_count() == 1 + l.index_in_g * (k - 1), "Nielsen-Schreier rank");
    }
}

void criterion3(Verdict& v) {
  Presentation g = corpus("d_infinity.grp");
  Chain c = derived_p_chain(g, 2, 3);
  auto a = normalized(g, c);
  for (const auto& q : a) v.detail << q.get_str() << " ";
  v.require(a == std::vector<Rational>{Rational(1, 4), Rational(1, 8), Rational(1, 16)}, "approximants");
  NormalGeneratorSpec spec = default_normal_generators(g);
  v.require(torsion_bound(spec) == 0, "torsion bound 0");
  PiImageVerdict pi = pi_image_check(g, spec, c.levels.at(0).table);
  v.detail << "pi_image " << pi.lhs.get_str() << " <= " << pi.rhs.get_str();
  v.require(pi.pass && pi.lhs == 1 && pi.rhs == 1, "pi_image equality at level 1");
}

void criterion4(Verdict& v) {
  auto start = std::chrono::steady_clock::now();
  Presentation g = corpus("surface2.grp");
  Chain c = derived_p_chain(g, 2, 1);
  BettiReport r = approx_sequence(g, c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(r.approximants.size() == 1, "one level");
  if (r.approximants.empty()) return;
  const Approximant& a = r.approximants[0];
  v.detail << "index " << a.index << ", H1 " << a.h1 << ", " << a.normalized.get_str() << ", "
           << c.levels[0].subgroup.presentation.generator_count() << " generators after elimination";
  v.require(a.index == 16, "index 16");
  v.require(a.h1 == 34, "H1 = 34");
  const long euler = 1 - 4 + 1;
  v.require(static_cast<long>(a.h1) == 2 - 16 * euler, "Euler characteristic oracle");
  v.require(a.normalized == Rational(17, 8), "17/8");
  v.require(c.levels[0].subgroup.presentation.generator_count() == 49 && c.levels[0].subgroup.eliminated_tree_edges == 15,
            "49 Schreier generators");
  v.require(secs < 5.0, "runtime under 5 s");
}

void criterion5(Verdict& v) {
  std::size_t pairs = 0, mismatches = 0;
  for (const std::string& name : grpcalc::testing::corpus_all()) {
    Presentation g = corpus(name);
    for (const Chain& c : corpus_chains(g))
      for (const ChainLevel& l : c.levels) {
        CohomologyReport r = h1_dim(g, l.table);
        ++pairs;
        if (r.dim_h1 != abelianization(l.subgroup.presentation).rank) ++mismatches;
      }
  }
  v.detail << pairs << " pairs, " << mismatches << " mismatches";
  v.require(pairs >= 12, "at least 12 pairs");
  v.require(mismatches == 0, "zero mismatches");
}

void criterion6(Verdict& v) {
  FiniteGroup c6 = grpcalc::testing::cyclic(6);
  std::vector<long> coeffs{-1, 1, 2};
  UncertaintySweep e = exhaustive_uncertainty(c6, 3, coeffs);
  v.detail << "C6 exhaustive " << e.checked << " elements, " << e.violations << " violations;";
  v.require(e.violations == 0, "C6 violations");
  // 6*3 + 15*9 + 20*27 nonzero elements with support <= 3 over {-1,1,2}
  v.require(e.checked == 693, "C6 element count");
  for (const std::string& name : {"finite/s3.grp", "finite/d4.grp", "finite/q8.grp", "c8.grp", "finite/a4.grp"}) {
    FiniteGroup g = finite(corpus(name));
    UncertaintySweep r = random_uncertainty(g, 1000, 42);
    v.detail << " " << name << " " << r.checked << "/" << r.violations;
    v.require(r.checked == 1000 && r.violations == 0, name + " random sweep");
  }
  for (const FiniteGroup& g : {c6, finite(corpus("finite/a4.grp"))}) {
    RingElement sum;
    for (std::uint32_t x = 0; x < g.order(); ++x) sum.add(x, 1);
    v.require(uncertainty_check(g, RingElement::delta(0)).equality, "equality at delta_e");
    v.require(uncertainty_check(g, sum).equality, "equality at the sum of all elements");
  }
}

void criterion7(Verdict& v) {
  std::size_t agreements = 0;
  for (const std::string& name : grpcalc::testing::finite_corpus()) {
    FiniteGroup g = finite(corpus(name));
    for (std::uint64_t p : {2u, 3u}) {
      bool ok = p_group_verdict(g, p) == is_power_of(g.order(), p);
      v.require(ok, name + " p=" + std::to_string(p));
      agreements += ok;
    }
  }
  AugmentationChain c2 = augmentation_powers_mod_p(grpcalc::testing::cyclic(2), 2);
  AugmentationChain s3 = augmentation_powers_mod_p(finite(corpus("finite/s3.grp")), 2);
  v.detail << agreements << "/18 verdicts agree; C2 dims";
  for (std::size_t d : c2.dims) v.detail << " " << d;
  v.detail << "; S3 p=2 stabilizes at dim " << s3.dims.back();
  v.require(c2.dims == std::vector<std::size_t>{1, 0}, "C2 dims (1,0)");
  v.require(!s3.reached_zero && s3.dims.back() > 0, "S3 stabilizes nonzero");
}

void criterion8(Verdict& v) {
  for (std::size_t n = 2; n <= 8; ++n) {
    Presentation c = pres("gens: g; rels: g^" + std::to_string(n) + ";");
    v.require(girth_finite(enumerate(c, {})) == n, "girth of C" + std::to_string(n));
  }
  Presentation tri = corpus("triangle237.grp");
  std::vector<Certificate> certs;
  for (const Chain& c : corpus_chains(tri))
    for (Certificate& x : chain_certificates(c)) certs.push_back(std::move(x));
  Presentation psl27 = pres("gens: a,b; rels: a^2, b^3, (a*b)^7, ([a,b])^4;");
  certs.push_back({"PSL(2,7)", enumerate(psl27, {})});
  GirthReport t = girth_interval(tri, certs, 4);
  v.detail << "(2,3,7) girth [" << t.lower << ", " << (t.upper ? std::to_string(*t.upper) : "inf") << "]";
  v.require(t.exact() && t.lower == 2, "(2,3,7) girth exactly 2");
  Presentation z4 = corpus("z4.grp");
  GirthReport c4 = girth_interval(z4, derived_p_chain(z4, 2, 3), 6);
  v.detail << "; <a|a^4> girth [" << c4.lower << ", " << (c4.upper ? std::to_string(*c4.upper) : "inf") << "]";
  v.require(c4.exact() && c4.lower == 4, "<a|a^4> girth 4");
  std::size_t sharp = 0;
  for (const std::string& name : grpcalc::testing::corpus_with_relators()) {
    Presentation g = corpus(name);
    IneqVerdict iv = ineq_consistency(g, girth_interval(g, derived_p_chain(g, 2, 1, 2000), 3));
    v.require(iv.sharp && iv.pass, name + " ineq sharpness");
    sharp += iv.sharp;
  }
  v.detail << "; ineq sharp on " << sharp << " presentations";
}

void criterion9(Verdict& v) {
  std::size_t levels = 0, checks = 0;
  for (const std::string& name : grpcalc::testing::corpus_all()) {
    Presentation g = corpus(name);
    for (const Chain& c : corpus_chains(g))
      for (const ChainLevel& l : c.levels) {
        Z1SupportReport r = z1_support_bound_check(g, l.table);
        ++levels;
        checks += r.checks.size();
        v.require(r.pass(), name + " level index " + std::to_string(l.index_in_g));
      }
  }
  Presentation c2 = pres("gens: a; rels: a^2;");
  Z1SupportReport r = z1_support_bound_check(c2, enumerate(c2, {}));
  v.detail << levels << " levels, " << checks << " relator checks; C2 dim Z1 " << r.dim_z1;
  v.require(r.pass() && r.checks.size() == 1 && r.checks[0].equality && r.dim_z1 == 1, "C2 equality");
}

void criterion10(Verdict& v) {
  std::mt19937_64 rng(10);
  std::size_t failures = 0;
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
    Word w = grpcalc::testing::random_word(rng, k, 12);
    FreeRingElement sum;
    for (std::uint32_t i = 0; i < k; ++i)
      sum += fox_derivative(w, i) * (FreeRingElement::of(Word::generator(i)) - FreeRingElement::one());
    if (sum != FreeRingElement::of(w) - FreeRingElement::one()) ++failures;
  }
  v.detail << "500 words, " << failures << " counterexamples";
  v.require(failures == 0, "fundamental identity");
}

std::vector<std::vector<std::string>> report_commands() {
  std::vector<std::vector<std::string>> out;
  for (const std::string& name : grpcalc::testing::corpus_all()) {
    out.push_back({"parse", corpus_path(name)});
    for (const std::string p : {"2", "3"})
      out.push_back({"betti", corpus_path(name), "--p", p, "--depth", "2", "--max-index", "2000"});
    out.push_back({"girth", corpus_path(name), "--p", "2,3", "--depth", "2", "--max-index", "2000", "--radius", "4"});
  }
  for (const std::string& name : grpcalc::testing::finite_corpus()) {
    out.push_back({"uncertainty", corpus_path(name), "--samples", "200"});
    out.push_back({"pgroup", corpus_path(name), "--integer-depth", "2"});
  }
  out.push_back({"bounds", "--summands", "0:2,0:3"});
  out.push_back({"girth", corpus_path("triangle237.grp"), "--quotient-rels", "([a,b])^4"});
  return out;
}

void criterion11(Verdict& v) {
  const auto commands = report_commands();
  std::size_t differing = 0, failed = 0;
  std::vector<std::string> first;
  for (const auto& c : commands) {
    int code = 0;
    first.push_back(cli_output(c, &code));
    if (code != 0) ++failed;
  }
  setenv("GRPCALC_THREADS", "1", 1);
  for (std::size_t i = 0; i < commands.size(); ++i)
    if (cli_output(commands[i]) != first[i]) ++differing;
  unsetenv("GRPCALC_THREADS");
  v.detail << commands.size() << " reports, " << differing << " differ, " << failed << " nonzero exits";
  v.require(differing == 0, "byte-identical reports");
  v.require(failed == 0, "every report command succeeds");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"PSL(2,Z) free product and torsion bound equal 1/6", criterion1},
      {"free group approximants F2 (5/4, 129/128), F3 17/8", criterion2},
      {"D_infinity approximants (1/4, 1/8, 1/16) and pi_image equality", criterion3},
      {"genus 2 surface group index 16, H1 34, 17/8", criterion4},
      {"Shapiro cross-check on corpus chain levels", criterion5},
      {"uncertainty principle over C6 and small groups", criterion6},
      {"augmentation ideal p-group verdicts", criterion7},
      {"girth values and ineq sharpness", criterion8},
      {"Z1 support bound on corpus chain levels", criterion9},
      {"Fox fundamental identity on 500 random words", criterion10},
      {"deterministic JSON reports", criterion11},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    all &= v.pass;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << " " << criteria[i].first << ": " << v.detail.str()
              << std::endl;
  }
  return all ? 0 : 1;
}
