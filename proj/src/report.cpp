#include "grpcalc/report.hpp"

#include <sstream>

namespace grpcalc::report {

void put_rational(Json& obj, const std::string& key, const Rational& q, const Style& style) {
  obj[key] = to_string(q);
  if (style.decimal) obj[key + "_decimal"] = to_decimal(q);
}

namespace {

Json word(const Word& w, const Presentation& p) { return render_word(w, p.generator_names()); }

Json words(const std::vector<Word>& ws, const Presentation& p) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(word(w, p));
  return a;
}

std::string truncation_string(const Chain& c) { return to_string(c.truncation); }

}  // namespace

Json presentation(const Presentation& p, const std::vector<ParseWarning>& warnings) {
  Json j;
  j["generators"] = p.generator_names();
  j["relators"] = words(p.relators(), p);
  j["normalized"] = render(p);
  Json w = Json::array();
  for (const ParseWarning& pw : warnings)
    w.push_back(Json{{"line", pw.line}, {"column", pw.column}, {"message", pw.message}});
  j["warnings"] = w;
  return j;
}

Json coset_table(const CosetTable& t, const Presentation& p) {
  Json j;
  j["index"] = t.size();
  j["normal"] = is_normal(t);
  j["subgroup_generators"] = words(t.subgroup_words(), p);
  Json action;
  for (std::uint32_t g = 0; g < t.generator_count(); ++g) action[p.name(g)] = t.permutation(g);
  j["action"] = action;
  return j;
}

Json chain(const Chain& c, const Presentation& p) {
  Json j;
  if (c.p)
    j["p"] = *c.p;
  else
    j["p"] = nullptr;
  Json indexes = Json::array();
  Json levels = Json::array();
  for (const ChainLevel& level : c.levels) {
    indexes.push_back(level.index_in_g);
    Json l;
    l["depth"] = level.depth;
    l["index"] = level.index_in_g;
    l["subgroup_generators"] = level.subgroup.presentation.generator_count();
    l["subgroup_relators"] = level.subgroup.presentation.relators().size();
    l["eliminated_tree_edges"] = level.subgroup.eliminated_tree_edges;
    l["normal"] = is_normal(level.table);
    l["subgroup_words"] = words(level.table.subgroup_words(), p);
    Json action;
    for (std::uint32_t g = 0; g < level.table.generator_count(); ++g) action[p.name(g)] = level.table.permutation(g);
    l["action"] = action;
    levels.push_back(l);
  }
  j["indexes"] = indexes;
  j["levels"] = levels;
  j["truncation"] = truncation_string(c);
  j["reason"] = c.reason;
  return j;
}

Json approximants(const std::vector<Approximant>& as, const Style& style) {
  Json a = Json::array();
  for (const Approximant& x : as) {
    Json j;
    j["level"] = x.level;
    j["index"] = x.index;
    j["dim_h1"] = x.h1;
    put_rational(j, "normalized", x.normalized, style);
    j["dim_z1"] = x.cohomology.dim_z1;
    j["dim_b1"] = x.cohomology.dim_b1;
    j["jacobian_rank"] = x.cohomology.jacobian_rank;
    j["dim_h1_shapiro"] = x.cohomology.dim_h1_shapiro;
    j["subgroup_generators"] = x.cohomology.subgroup_generators;
    j["subgroup_relators"] = x.cohomology.subgroup_relators;
    Json torsion = Json::array();
    for (const BigInt& t : x.cohomology.abelianization_of_h.torsion) torsion.push_back(t.get_str());
    j["subgroup_abelianization"] = Json{{"rank", x.cohomology.abelianization_of_h.rank}, {"torsion", torsion}};
    a.push_back(j);
  }
  return a;
}

Json checks(const std::vector<BoundCheck>& cs, const Style& style) {
  Json a = Json::array();
  for (const BoundCheck& c : cs) {
    Json j;
    j["name"] = c.name;
    j["level"] = c.level;
    put_rational(j, "lhs", c.lhs, style);
    put_rational(j, "rhs", c.rhs, style);
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    a.push_back(j);
  }
  return a;
}

Json betti(const BettiReport& r, const Style& style) {
  Json j;
  Json ch;
  if (r.p)
    ch["p"] = *r.p;
  else
    ch["p"] = nullptr;
  ch["indexes"] = r.chain_indexes;
  ch["truncation"] = to_string(r.truncation);
  ch["reason"] = r.truncation_reason;
  j["chain"] = ch;
  j["approximants"] = approximants(r.approximants, style);
  Json b;
  for (const auto& [name, value] : r.bounds) put_rational(b, name, value, style);
  j["bounds"] = b;
  j["checks"] = checks(r.checks, style);
  Json notes;
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  j["violations"] = r.violations().size();
  return j;
}

Json girth(const GirthReport& r, const Presentation& p) {
  Json j;
  j["lower"] = r.lower;
  j["lower_display"] = r.lower_exhausted ? ">= " + std::to_string(r.lower) : std::to_string(r.lower);
  j["lower_exhausted"] = r.lower_exhausted;
  if (r.upper)
    j["upper"] = *r.upper;
  else
    j["upper"] = "inf";
  j["exact"] = r.exact();
  if (r.exact()) j["girth"] = r.lower;
  j["upper_witness"] = r.upper_witness ? word(*r.upper_witness, p) : Json(nullptr);
  j["uncertified_word"] = r.uncertified ? word(*r.uncertified, p) : Json(nullptr);
  j["radius"] = r.radius;
  j["certificates"] = r.certificates;
  j["words_checked"] = r.words_checked;
  return j;
}

Json ineq(const IneqVerdict& v, const Style& style) {
  Json j;
  j["k"] = v.k;
  j["shortest_relator"] = v.shortest_relator ? Json(*v.shortest_relator) : Json(nullptr);
  put_rational(j, "relator_length_bound", v.bound, style);
  if (v.reciprocal)
    put_rational(j, "reciprocal_gap", *v.reciprocal, style);
  else
    j["reciprocal_gap"] = nullptr;
  j["sharp"] = v.sharp;
  j["upper_consistent"] = v.upper_consistent;
  j["vacuous"] = v.vacuous;
  j["pass"] = v.pass;
  j["levels"] = v.level_notes;
  j["note"] = v.note;
  return j;
}

Json z1_support(const Z1SupportReport& r, const Presentation& p, const Style& style) {
  Json j;
  j["index"] = r.index;
  j["dim_z1"] = r.dim_z1;
  j["vacuous"] = r.vacuous;
  Json cs = Json::array();
  for (const Z1SupportCheck& c : r.checks) {
    Json x;
    x["relator"] = word(p.relators()[c.relator], p);
    x["generator"] = p.name(c.generator);
    x["support"] = c.support;
    put_rational(x, "bound", c.bound, style);
    x["pass"] = c.pass;
    x["equality"] = c.equality;
    cs.push_back(x);
  }
  j["checks"] = cs;
  Json sk = Json::array();
  for (auto [rel, gen] : r.skipped)
    sk.push_back(Json{{"relator", word(p.relators()[rel], p)}, {"generator", p.name(static_cast<std::uint32_t>(gen))}});
  j["skipped"] = sk;
  j["pass"] = r.pass();
  return j;
}

Json ring_element(const RingElement& f) {
  Json j = Json::object();
  for (const auto& [g, c] : f.coefficients()) j[std::to_string(g)] = to_string(c);
  return j;
}

Json uncertainty(const UncertaintySweep& s) {
  Json j;
  j["checked"] = s.checked;
  j["violations"] = s.violations;
  j["equalities"] = s.equalities;
  j["counterexample"] = s.counterexample ? ring_element(*s.counterexample) : Json(nullptr);
  return j;
}

Json augmentation(const AugmentationChain& c) {
  Json j;
  if (c.p)
    j["p"] = *c.p;
  else
    j["p"] = nullptr;
  j["dims"] = c.dims;
  j["reached_zero"] = c.reached_zero;
  j["terminal_power"] = c.terminal_power;
  return j;
}

Json augmentation_integer(const std::vector<IntegerAugmentationLevel>& levels) {
  Json a = Json::array();
  for (const IntegerAugmentationLevel& l : levels) {
    Json j;
    j["power"] = l.power;
    j["rank"] = l.rank;
    Json d = Json::array();
    for (const BigInt& x : l.divisors_in_previous) d.push_back(x.get_str());
    j["divisors_in_previous"] = d;
    j["index_in_previous"] = l.power == 1 ? Json(nullptr) : Json(l.index_in_previous.get_str());
    a.push_back(j);
  }
  return a;
}

Json error(const Error& e) {
  Json j;
  j["kind"] = e.kind();
  j["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["line"] = pe->line();
    j["column"] = pe->column();
  }
  return Json{{"error", j}};
}

namespace {

std::string leaf(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << csv_field(path) << ',' << csv_field(j.is_structured() ? j.dump() : leaf(j)) << '\n';
  }
}

void text(const Json& j, const std::string& key, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const bool scalar_array = j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
  if (!j.is_structured() || scalar_array || j.empty()) {
    std::string value;
    if (scalar_array) {
      for (const Json& x : j) value += (value.empty() ? "" : ", ") + leaf(x);
      value = "[" + value + "]";
    } else {
      value = j.is_structured() ? j.dump() : leaf(j);
    }
    out << pad << key << ": " << value << '\n';
    return;
  }
  if (!key.empty()) out << pad << key << ":\n";
  const int inner = key.empty() ? depth : depth + 1;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) text(it.value(), it.key(), inner, out);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) text(j[i], "- " + std::to_string(i), inner, out);
  }
}

}  // namespace

Json multiplication_table(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["generators"] = g.generators();
  j["multiplication_table"] = g.multiplication_table();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("multiplication_table") ? j["multiplication_table"] : j;
  if (!rows.is_array()) throw InputError("multiplication table must be an array of rows");
  std::vector<std::vector<std::uint32_t>> mul;
  for (const Json& row : rows) {
    if (!row.is_array()) throw InputError("multiplication table row must be an array");
    std::vector<std::uint32_t> r;
    for (const Json& x : row) {
      if (!x.is_number_unsigned()) throw InputError("multiplication table entries must be nonnegative integers");
      r.push_back(x.get<std::uint32_t>());
    }
    mul.push_back(std::move(r));
  }
  return FiniteGroup::from_multiplication_table(std::move(mul));
}

std::string to_csv(const Json& j) {
  std::ostringstream out;
  out << "path,value\n";
  flatten(j, "", out);
  return out.str();
}

std::string to_text(const Json& j) {
  std::ostringstream out;
  text(j, "", 0, out);
  return out.str();
}

}  // namespace grpcalc::report
