#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grpcalc/betti_bounds.hpp"
#include "grpcalc/chains.hpp"
#include "grpcalc/coset_enum.hpp"
#include "grpcalc/errors.hpp"
#include "grpcalc/girth.hpp"
#include "grpcalc/groupring.hpp"
#include "grpcalc/words.hpp"

namespace grpcalc::report {

using Json = nlohmann::ordered_json;

/// Rendering options shared by every serializer.
struct Style {
  /// Adds "<field>_decimal" display strings next to exact rationals.
  bool decimal = false;
};

/// Exact rational as a string, plus an optional decimal companion field.
void put_rational(Json& obj, const std::string& key, const Rational& q, const Style& style);

Json presentation(const Presentation& p, const std::vector<ParseWarning>& warnings = {});
Json coset_table(const CosetTable& t, const Presentation& p);
Json chain(const Chain& c, const Presentation& p);
Json approximants(const std::vector<Approximant>& a, const Style& style);
Json checks(const std::vector<BoundCheck>& c, const Style& style);
Json betti(const BettiReport& r, const Style& style);
Json girth(const GirthReport& r, const Presentation& p);
Json ineq(const IneqVerdict& v, const Style& style);
Json z1_support(const Z1SupportReport& r, const Presentation& p, const Style& style);
Json uncertainty(const UncertaintySweep& s);
Json ring_element(const RingElement& f);
Json augmentation(const AugmentationChain& c);
Json augmentation_integer(const std::vector<IntegerAugmentationLevel>& levels);
Json error(const Error& e);

/// {"order": n, "multiplication_table": [[...], ...]}, rows indexed by the left factor.
Json multiplication_table(const FiniteGroup& g);
/// Accepts the object above or a bare array of rows; validated as a group.
FiniteGroup group_from_json(const Json& j);

/// "path,value" rows of every leaf, in document order.
std::string to_csv(const Json& j);
/// "path: value" lines, indented by nesting depth.
std::string to_text(const Json& j);

}  // namespace grpcalc::report
