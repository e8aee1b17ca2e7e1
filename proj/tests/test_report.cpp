#include <doctest.h>

#include <sstream>

#include "grpcalc/cli.hpp"
#include "grpcalc/report.hpp"
#include "support.hpp"

using namespace grpcalc;
using grpcalc::report::Json;
using grpcalc::testing::corpus_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("rationals render exactly") {
  Json obj = Json::object();
  report::put_rational(obj, "x", Rational(1, 6), {});
  report::put_rational(obj, "y", Rational(4), {true});
  CHECK(obj.dump() == R"({"x":"1/6","y":"4","y_decimal":"4.000000"})");
  Json neg = Json::object();
  report::put_rational(neg, "z", Rational(-3, 4), {true});
  CHECK(neg["z"] == "-3/4");
  CHECK(neg["z_decimal"].is_string());
}

TEST_CASE("betti report structure") {
  Run r = run({"betti", corpus_path("d_infinity.grp"), "--p", "2", "--depth", "3", "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  std::vector<std::string> k = keys(j);
  REQUIRE(k.size() >= 4);
  CHECK(std::vector<std::string>(k.begin(), k.begin() + 4) ==
        std::vector<std::string>{"chain", "approximants", "bounds", "checks"});
  std::vector<std::string> values;
  for (const auto& a : j["approximants"]) values.push_back(a["normalized"]);
  CHECK(values == std::vector<std::string>{"1/4", "1/8", "1/16"});
  CHECK(j["bounds"]["torsion"] == "0");
  CHECK(!has_float(j));
}

TEST_CASE("no floating point in any report") {
  const std::vector<std::vector<std::string>> commands{
      {"parse", corpus_path("q8.grp")},
      {"cosets", corpus_path("s3.grp")},
      {"chain", corpus_path("f2.grp"), "--depth", "2"},
      {"betti", corpus_path("surface2.grp"), "--depth", "1", "--decimal"},
      {"bounds", "--summands", "0:2,0:3", "--decimal"},
      {"girth", corpus_path("z4.grp")},
      {"uncertainty", corpus_path("finite/d4.grp"), "--samples", "50"},
      {"pgroup", corpus_path("finite/q8.grp")},
  };
  for (const auto& c : commands) {
    Run r = run(c);
    CHECK(r.code == 0);
    CHECK(!has_float(Json::parse(r.out)));
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"betti", corpus_path("f2.grp"), "--p", "2", "--depth", "2"};
  Run a = run(args);
  Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  setenv("GRPCALC_THREADS", "1", 1);
  Run c = run(args);
  unsetenv("GRPCALC_THREADS");
  CHECK(a.out == c.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"parse", std::string(GRPCALC_TEST_DATA_DIR) + "/bad.grp"}).code == 1);
  CHECK(run({"parse", "/nonexistent/file.grp"}).code == 1);
  CHECK(run({"cosets", corpus_path("z.grp"), "--max-cosets", "100"}).code == 2);
  CHECK(run({"betti", corpus_path("z.grp"), "--p", "6"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"bounds", "--summands", "0:2,0:3"}).code == 0);
  CHECK(run({"betti", corpus_path("z.grp"), "--p", "2,3"}).code == 1);
}

TEST_CASE("structured errors") {
  Run r = run({"parse", std::string(GRPCALC_TEST_DATA_DIR) + "/bad.grp"});
  Json j = Json::parse(r.out);
  REQUIRE(j.contains("error"));
  CHECK(j["error"]["kind"] == "ParseError");
  CHECK(j["error"]["line"] == 3);
}

TEST_CASE("csv and text formats") {
  Run csv = run({"bounds", "--summands", "0:2,0:3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("bounds.free_product,1/6") != std::string::npos);
  Run text = run({"parse", corpus_path("s3.grp"), "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("gens: a, b;") != std::string::npos);
}

TEST_CASE("multiplication tables round trip through JSON") {
  FiniteGroup a4 = grpcalc::testing::finite(grpcalc::testing::corpus("finite/a4.grp"));
  Json j = report::multiplication_table(a4);
  CHECK(j["order"] == 12);
  FiniteGroup back = report::group_from_json(Json::parse(j.dump()));
  CHECK(back.multiplication_table() == a4.multiplication_table());
  CHECK(report::group_from_json(j["multiplication_table"]).order() == 12);
  CHECK_THROWS_AS(report::group_from_json(Json::parse("[[0,1],[1,1]]")), InputError);
  CHECK_THROWS_AS(report::group_from_json(Json::parse("[[0,-1],[1,0]]")), InputError);
}
