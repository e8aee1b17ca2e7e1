#include "grpcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "grpcalc/betti_bounds.hpp"
#include "grpcalc/chains.hpp"
#include "grpcalc/cohomology.hpp"
#include "grpcalc/coset_enum.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/girth.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/report.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc::cli {

namespace {

using report::Json;

struct Config {
  std::string file;
  std::vector<std::uint64_t> primes;
  std::size_t depth = kDefaultChainDepth;
  std::size_t max_index = kDefaultMaxIndex;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t radius = 6;
  std::uint64_t seed = 42;
  std::string format = "json";
  bool json = false;
  bool decimal = false;
  std::string output;
  std::string normal;
  std::string orders;
  std::string summands;
  std::string relator_orders;
  std::size_t k = 0;
  std::string subgroup;
  std::vector<std::string> quotient_rels;
  std::vector<std::string> levels;
  std::size_t samples = 1000;
  std::size_t support = 0;
  std::string coefficients = "-1,1,2";
  std::size_t max_depth = 64;
  std::size_t integer_depth = 0;
  std::string table;
  bool emit_table = false;
};

struct Outcome {
  Json body;
  int code = ok;
  std::string text{};  // preferred plain rendering for --format text, if any
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::uint64_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("bad " + what + " '" + s + "'");
  return std::stoull(s);
}

Presentation load(const Config& cfg, std::vector<ParseWarning>* warnings = nullptr) {
  if (cfg.file.empty()) throw InputError("an input presentation file is required");
  return parse_presentation(read_file(cfg.file), warnings);
}

std::vector<std::uint64_t> primes_or(const Config& cfg, std::vector<std::uint64_t> fallback) {
  std::vector<std::uint64_t> ps = cfg.primes.empty() ? std::move(fallback) : cfg.primes;
  for (std::uint64_t p : ps)
    if (!is_prime(p) || p >= (1ull << 31)) throw InputError("--p must be a prime below 2^31, got " + std::to_string(p));
  return ps;
}

std::uint64_t single_prime(const Config& cfg) {
  std::vector<std::uint64_t> ps = primes_or(cfg, {2});
  if (ps.size() != 1) throw InputError("this command takes a single prime");
  return ps.front();
}

Chain build_chain(const Presentation& g, const Config& cfg, std::uint64_t p) {
  if (!cfg.levels.empty()) {
    std::vector<std::vector<Word>> subgroups;
    for (const std::string& l : cfg.levels) subgroups.push_back(parse_word_list(l, g));
    return explicit_chain(g, subgroups, cfg.max_cosets);
  }
  return derived_p_chain(g, p, cfg.depth, cfg.max_index);
}

NormalGeneratorSpec normal_spec(const Presentation& g, const Config& cfg) {
  return cfg.normal.empty() ? default_normal_generators(g) : parse_normal_generators(cfg.normal, g);
}

Json spec_json(const NormalGeneratorSpec& s, const Presentation& g) {
  Json a = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    a.push_back(Json{{"element", render_word(s.elements[i], g.generator_names())}, {"order", s.orders[i].str()}});
  return a;
}

Outcome cmd_parse(const Config& cfg) {
  std::vector<ParseWarning> warnings;
  Presentation g = load(cfg, &warnings);
  return {Json{{"presentation", report::presentation(g, warnings)}}, ok, render(g)};
}

Outcome cmd_cosets(const Config& cfg) {
  Presentation g = load(cfg);
  std::vector<Word> sub = parse_word_list(cfg.subgroup, g);
  CosetTable t = enumerate(g, sub, cfg.max_cosets);
  return {Json{{"cosets", report::coset_table(t, g)}}};
}

Outcome cmd_chain(const Config& cfg) {
  Presentation g = load(cfg);
  Chain c = build_chain(g, cfg, single_prime(cfg));
  return {Json{{"chain", report::chain(c, g)}}};
}

Outcome cmd_betti(const Config& cfg) {
  const report::Style style{cfg.decimal};
  Presentation g = load(cfg);
  Chain c = build_chain(g, cfg, single_prime(cfg));
  NormalGeneratorSpec spec = normal_spec(g, cfg);
  BettiReport r = betti_report(g, c, spec);
  Json body = report::betti(r, style);
  Json z1 = Json::array();
  bool z1_pass = true;
  for (const ChainLevel& level : c.levels) {
    Z1SupportReport z = z1_support_bound_check(g, level.table);
    z1_pass = z1_pass && z.pass();
    Json j = report::z1_support(z, g, style);
    z1.push_back(Json{{"level", level.depth}, {"result", j}});
  }
  body["z1_support"] = z1;
  body["normal_generators"] = spec_json(spec, g);
  const int code = r.violations().empty() && z1_pass ? ok : invariant_failed;
  return {body, code};
}

Outcome cmd_bounds(const Config& cfg) {
  const report::Style style{cfg.decimal};
  Json b = Json::object();
  if (!cfg.file.empty()) {
    Presentation g = load(cfg);
    NormalGeneratorSpec spec = normal_spec(g, cfg);
    report::put_rational(b, "trivial", trivial_bound(g.generator_count()), style);
    report::put_rational(b, "torsion", torsion_bound(spec), style);
    report::put_rational(b, "relator_length", relator_length_bound(g), style);
    for (std::uint64_t p : cfg.primes.empty() ? std::vector<std::uint64_t>{} : primes_or(cfg, {})) {
      ModPBound m = mod_p_bound(g, p);
      report::put_rational(b, "mod_" + std::to_string(p), m.value, style);
    }
  }
  if (cfg.k > 0) report::put_rational(b, "trivial", trivial_bound(cfg.k), style);
  if (!cfg.orders.empty()) {
    std::vector<Order> orders;
    for (const std::string& s : split(cfg.orders)) orders.push_back(Order::parse(s));
    if (cfg.k > 0 && cfg.k != orders.size())
      throw InputError("--k " + std::to_string(cfg.k) + " disagrees with " + std::to_string(orders.size()) + " orders");
    report::put_rational(b, "torsion", torsion_bound(orders), style);
  }
  if (!cfg.summands.empty()) {
    std::vector<Summand> summands;
    for (const std::string& s : split(cfg.summands)) {
      auto colon = s.find(':');
      if (colon == std::string::npos) throw InputError("summand '" + s + "' must be beta:order");
      summands.push_back({parse_rational(s.substr(0, colon)), Order::parse(s.substr(colon + 1))});
    }
    std::vector<std::uint64_t> rel;
    for (const std::string& s : split(cfg.relator_orders)) rel.push_back(parse_count(s, "relator order"));
    report::put_rational(b, "free_product", free_product_lower_bound(summands, rel), style);
  }
  if (b.empty()) throw InputError("bounds needs a presentation file, --k, --orders or --summands");
  return {Json{{"bounds", b}}};
}

Outcome cmd_girth(const Config& cfg) {
  const report::Style style{cfg.decimal};
  Presentation g = load(cfg);
  std::vector<Certificate> certs;
  std::vector<Approximant> approx;
  Json chains = Json::array();
  for (std::uint64_t p : primes_or(cfg, {2})) {
    Chain c = build_chain(g, cfg, p);
    chains.push_back(report::chain(c, g));
    for (Certificate& cert : chain_certificates(c)) certs.push_back(std::move(cert));
    for (Approximant& a : approx_sequence(g, c).approximants) approx.push_back(std::move(a));
    if (!cfg.levels.empty()) break;
  }
  for (std::size_t i = 0; i < cfg.quotient_rels.size(); ++i) {
    std::vector<Word> extra = parse_word_list(cfg.quotient_rels[i], g);
    std::vector<Word> rels = g.relators();
    rels.insert(rels.end(), extra.begin(), extra.end());
    Presentation q(g.generator_names(), rels);
    CosetTable t = enumerate(q, {}, cfg.max_cosets);
    if (!relators_hold(g, t)) throw InvariantViolation("quotient table violates a relator");
    certs.push_back({"quotient " + std::to_string(i + 1) + " (order " + std::to_string(t.size()) + ")", t});
  }
  GirthReport r = girth_interval(g, certs, cfg.radius);
  IneqVerdict v = ineq_consistency(g, r, approx);
  Json body;
  body["girth"] = report::girth(r, g);
  body["ineq"] = report::ineq(v, style);
  body["chains"] = chains;
  return {body, v.pass ? ok : invariant_failed};
}

FiniteGroup finite_group(const Config& cfg) {
  if (!cfg.table.empty()) {
    Json j;
    try {
      j = Json::parse(read_file(cfg.table));
    } catch (const Json::parse_error& e) {
      throw InputError(cfg.table + ": " + e.what());
    }
    return report::group_from_json(j);
  }
  Presentation g = load(cfg);
  return FiniteGroup::from_table(enumerate(g, {}, cfg.max_cosets));
}

Outcome cmd_uncertainty(const Config& cfg) {
  FiniteGroup grp = finite_group(cfg);
  Json body;
  body["order"] = grp.order();
  std::size_t violations = 0;
  RingElement sum;
  for (std::uint32_t x = 0; x < grp.order(); ++x) sum.add(x, 1);
  UncertaintyResult id = uncertainty_check(grp, RingElement::delta(0));
  UncertaintyResult all = uncertainty_check(grp, sum);
  body["identity"] = Json{{"rank", id.rank}, {"support", id.support}, {"equality", id.equality}};
  body["sum"] = Json{{"rank", all.rank}, {"support", all.support}, {"equality", all.equality}};
  if (cfg.support > 0) {
    std::vector<long> coeffs;
    for (const std::string& s : split(cfg.coefficients)) {
      Rational q = parse_rational(s);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError("coefficients must be small integers");
      coeffs.push_back(q.get_num().get_si());
    }
    UncertaintySweep e = exhaustive_uncertainty(grp, cfg.support, coeffs);
    violations += e.violations;
    Json j = report::uncertainty(e);
    j["max_support"] = cfg.support;
    j["coefficients"] = coeffs;
    body["exhaustive"] = j;
  }
  if (cfg.samples > 0) {
    UncertaintySweep r = random_uncertainty(grp, cfg.samples, cfg.seed);
    violations += r.violations;
    Json j = report::uncertainty(r);
    j["seed"] = cfg.seed;
    body["random"] = j;
  }
  body["violations"] = violations;
  if (cfg.emit_table || violations > 0) body["group"] = report::multiplication_table(grp);
  return {body, violations == 0 ? ok : invariant_failed};
}

Outcome cmd_pgroup(const Config& cfg) {
  FiniteGroup grp = finite_group(cfg);
  Json body;
  body["order"] = grp.order();
  Json verdicts = Json::array();
  for (std::uint64_t p : primes_or(cfg, {2, 3})) {
    AugmentationChain c = augmentation_powers_mod_p(grp, p, cfg.max_depth);
    Json j = report::augmentation(c);
    j["p_group"] = p_group_verdict(grp, p);
    verdicts.push_back(j);
  }
  body["verdicts"] = verdicts;
  if (cfg.integer_depth > 0) {
    body["integer"] = report::augmentation_integer(augmentation_powers_integer(grp, cfg.integer_depth));
    body["integer_note"] = "exploratory lattice data; no statement about the intersection of all powers";
  }
  if (cfg.emit_table) body["group"] = report::multiplication_table(grp);
  return {body};
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InputError*>(&e)) return input_error;
  if (dynamic_cast<const CapExceeded*>(&e)) return cap_exceeded;
  return invariant_failed;
}

std::string render_output(const Outcome& o, const std::string& format) {
  if (format == "csv") return report::to_csv(o.body);
  if (format == "text") return o.text.empty() ? report::to_text(o.body) : o.text;
  return o.body.dump(2) + "\n";
}

void emit(const std::string& text, const Config& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + cfg.output);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact computations for finitely presented groups", "grpcalc"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool file_required = true) {
    auto* f = sub->add_option("file", cfg.file, "Presentation file (.grp)");
    if (file_required) f->required();
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--json", cfg.json, "Same as --format json");
    sub->add_flag("--decimal", cfg.decimal, "Add display-only decimal fields");
    sub->add_option("--output", cfg.output, "Write the report to FILE");
    sub->add_option("--max-cosets", cfg.max_cosets, "Coset enumeration cap")->check(CLI::PositiveNumber);
  };
  auto chain_opts = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.primes, "Prime(s) of the derived p-series")->delimiter(',');
    sub->add_option("--depth", cfg.depth, "Chain depth")->check(CLI::PositiveNumber);
    sub->add_option("--max-index", cfg.max_index, "Largest admissible index")->check(CLI::PositiveNumber);
    sub->add_option("--level", cfg.levels, "Subgroup generators of one level of a user chain (repeatable)");
  };

  auto* parse = app.add_subcommand("parse", "Echo the normalized presentation");
  common(parse);
  auto* cosets = app.add_subcommand("cosets", "Todd-Coxeter enumeration");
  common(cosets);
  cosets->add_option("--subgroup", cfg.subgroup, "Comma-separated subgroup generators");
  auto* chain = app.add_subcommand("chain", "Derived p-series");
  common(chain);
  chain_opts(chain);
  auto* betti = app.add_subcommand("betti", "Approximants, bounds and per-level checks");
  common(betti);
  chain_opts(betti);
  betti->add_option("--normal", cfg.normal, "Normal generators as word:order, ...");
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  common(bounds, false);
  bounds->add_option("--p", cfg.primes, "Primes for the mod-p bound")->delimiter(',');
  bounds->add_option("--normal", cfg.normal, "Normal generators as word:order, ...");
  bounds->add_option("--k", cfg.k, "Generator count")->check(CLI::PositiveNumber);
  bounds->add_option("--orders", cfg.orders, "Normal generator orders, e.g. 2,3,inf");
  bounds->add_option("--summands", cfg.summands, "Free product data beta:order, ...");
  bounds->add_option("--relator-orders", cfg.relator_orders, "Orders of the added relators");
  auto* girth = app.add_subcommand("girth", "Certified girth interval");
  common(girth);
  chain_opts(girth);
  girth->add_option("--radius", cfg.radius, "Search radius")->check(CLI::PositiveNumber);
  girth->add_option("--quotient-rels", cfg.quotient_rels, "Extra relators defining a finite quotient (repeatable)");
  auto* uncertainty = app.add_subcommand("uncertainty", "Group ring uncertainty checks");
  common(uncertainty, false);
  uncertainty->add_option("--samples", cfg.samples, "Random elements");
  uncertainty->add_option("--seed", cfg.seed, "Random seed");
  uncertainty->add_option("--support", cfg.support, "Exhaustive sweep up to this support");
  uncertainty->add_option("--coefficients", cfg.coefficients, "Coefficients of the exhaustive sweep");
  auto* pgroup = app.add_subcommand("pgroup", "Augmentation ideal powers");
  common(pgroup, false);
  pgroup->add_option("--p", cfg.primes, "Primes")->delimiter(',');
  pgroup->add_option("--max-depth", cfg.max_depth, "Largest power")->check(CLI::PositiveNumber);
  pgroup->add_option("--integer-depth", cfg.integer_depth, "Also compute integral powers up to this depth");
  for (auto* sub : {uncertainty, pgroup}) {
    sub->add_option("--table", cfg.table, "Multiplication table JSON instead of a presentation");
    sub->add_flag("--emit-table", cfg.emit_table, "Include the multiplication table in the report");
  }

  std::vector<std::string> storage{"grpcalc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    Json j{{"error", Json{{"kind", "UsageError"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    err << "grpcalc: " << e.what() << "\n";
    return input_error;
  }
  if (cfg.json) cfg.format = "json";

  try {
    Outcome o;
    if (parse->parsed()) o = cmd_parse(cfg);
    else if (cosets->parsed()) o = cmd_cosets(cfg);
    else if (chain->parsed()) o = cmd_chain(cfg);
    else if (betti->parsed()) o = cmd_betti(cfg);
    else if (bounds->parsed()) o = cmd_bounds(cfg);
    else if (girth->parsed()) o = cmd_girth(cfg);
    else if (uncertainty->parsed()) o = cmd_uncertainty(cfg);
    else o = cmd_pgroup(cfg);
    emit(render_output(o, cfg.format), cfg, out);
    return o.code;
  } catch (const Error& e) {
    Outcome o{report::error(e), exit_code_for(e)};
    err << "grpcalc: " << e.kind() << ": " << e.what() << "\n";
    try {
      emit(render_output(o, cfg.format == "text" ? "text" : cfg.format), cfg, out);
    } catch (const Error&) {
      out << o.body.dump(2) << "\n";
    }
    return o.code;
  } catch (const std::exception& e) {
    Json j{{"error", Json{{"kind", "InternalError"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    err << "grpcalc: " << e.what() << "\n";
    return invariant_failed;
  }
}

}  // namespace grpcalc::cli
