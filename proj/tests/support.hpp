#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grpcalc/coset_enum.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc::testing {

inline std::string corpus_path(const std::string& name) { return std::string(GRPCALC_CORPUS_DIR) + "/" + name; }

inline Presentation corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return parse_presentation(s.str());
}

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline FiniteGroup finite(const Presentation& p) { return FiniteGroup::from_table(enumerate(p, {})); }

inline FiniteGroup cyclic(std::size_t n) {
  return finite(pres("gens: g; rels: g^" + std::to_string(n) + ";"));
}

/// Presentations with relators whose chain levels are cheap.
inline const std::vector<std::string>& corpus_with_relators() {
  static const std::vector<std::string> names{"d_infinity.grp", "z2.grp", "surface2.grp", "z4.grp",
                                              "q8.grp", "s3.grp", "triangle237.grp", "psl2z.grp"};
  return names;
}

inline const std::vector<std::string>& corpus_all() {
  static const std::vector<std::string> names{"z.grp",   "f2.grp",         "f3.grp",     "d_infinity.grp",
                                              "z2.grp",  "surface2.grp",   "z4.grp",     "q8.grp",
                                              "s3.grp",  "triangle237.grp", "psl2z.grp"};
  return names;
}

inline const std::vector<std::string>& finite_corpus() {
  static const std::vector<std::string> names{"finite/c2.grp", "finite/c3.grp", "finite/c4.grp",
                                              "finite/klein4.grp", "finite/s3.grp", "finite/d4.grp",
                                              "finite/q8.grp", "finite/c6.grp", "finite/a4.grp"};
  return names;
}

inline Word random_word(std::mt19937_64& rng, std::uint32_t k, std::size_t max_len) {
  std::vector<Letter> letters;
  const std::size_t len = rng() % (max_len + 1);
  while (letters.size() < len) {
    Letter x{static_cast<std::uint32_t>(rng() % k), static_cast<std::int8_t>(rng() % 2 ? 1 : -1)};
    if (!letters.empty() && letters.back() == x.inverse()) continue;
    letters.push_back(x);
  }
  return Word(letters);
}

}  // namespace grpcalc::testing
