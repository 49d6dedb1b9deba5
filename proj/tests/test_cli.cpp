#include <catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"
#include "itermag/errors.hpp"

using namespace itermag;
using namespace itermag::cli;

namespace {

struct Result {
  int         status;
  std::string out, err;
};

Result call(std::vector<std::string> args, std::string const& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int                status = run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string const kS3WordNorm = R"J({"kind": "normed-group", "group": "S3", "word-norm": ["(1 2)"]})J";

}  // namespace

TEST_CASE("parse a two-point metric") {
  auto s = parse_input(R"({"kind":"metric","points":["a","b"],"d":[[0,1],[1,0]]})");
  REQUIRE(std::holds_alternative<GenMetricSpace>(s.value));
  auto const& x = std::get<GenMetricSpace>(s.value);
  CHECK(x.size() == 2);
  CHECK(x.d[0][1] == Extended(1));
}

TEST_CASE("decimal and fraction strings parse exactly") {
  auto s = parse_input(R"({"kind":"metric","points":["a","b"],"d":[[0,"0.25"],["1/4",0]]})");
  auto const& x = std::get<GenMetricSpace>(s.value);
  CHECK(x.d[0][1] == Extended(Rational(1, 4)));
  CHECK(x.d[1][0] == x.d[0][1]);
  auto t = parse_input(R"({"kind":"metric","points":["a","b"],"d":[[0,"inf"],[2,0]]})");
  CHECK(std::get<GenMetricSpace>(t.value).d[0][1].is_infinite());
}

TEST_CASE("parse a normed group from a table") {
  auto s = parse_input(R"({"kind": "normed-group",
    "elements": ["e", "a", "b"],
    "table": [["e", "a", "b"], ["a", "b", "e"], ["b", "e", "a"]],
    "norm": {"e": 0, "a": 1, "b": 1}})");
  auto const& n = std::get<NormedGroup>(s.value);
  CHECK(n.group.order() == 3);
  CHECK(n.norm[n.group.index_of("a")] == 1);
}

TEST_CASE("parse a sphere and suspensions") {
  auto s = parse_input(R"({"kind":"sphere","n":2})");
  CHECK(std::get<StrictNCat>(s.value).n == 2);
  auto t = parse_input(R"({"kind":"ncat-suspension","of":{"kind":"sphere","n":1},"times":2})");
  CHECK(std::get<StrictNCat>(t.value).n == 3);
  CHECK(t.times == 2);
}

TEST_CASE("category composites of identities are filled in") {
  auto s = parse_input(R"({"kind":"category","objects":["A","B","C"],
    "morphisms":[{"name":"f","src":"A","tgt":"B"},{"name":"g","src":"B","tgt":"C"},{"name":"h","src":"A","tgt":"C"}],
    "compose":[["f","g","h"]]})");
  auto const& c = std::get<FinCategory>(s.value);
  CHECK(c.morphisms.size() == 6);
  CHECK(validate(c).ok);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_input("{\"kind\": \"metric\",\n  \"points\": [\"a\" \"b\"]}");
    FAIL("no error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).starts_with("line 2, column 20"));
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_input(R"({"kind":"metric","points":["a"],"d":[[0]],"extra":1})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"metric","points":["a","b"],"d":[[0,0.5],[1,0]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"blob"})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"metric","points":["a","a"],"d":[[0,1],[1,0]]})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"sphere","n":"2"})"), InputError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"product","factors":[{"kind":"sphere","n":1},{"kind":"sphere","n":1}]})"),
                  InputError);
}

TEST_CASE("validators run on every input") {
  CHECK_THROWS_AS(parse_input(R"({"kind":"metric","points":["a","b","c"],"d":[[0,1,3],[1,0,1],[3,1,0]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"metric","points":["a","b"],"d":[[1,1],[1,0]]})"), ValidationError);
  CHECK_THROWS_AS(parse_input(R"J({"kind":"cat-group","group":"S3","normal-subgroup":["e","(1 2)"]})J"),
                  ValidationError);
  CHECK_THROWS_AS(parse_input(R"({"kind":"normed-group","group":"Z2","norm":{"0":1,"1":1}})"), ValidationError);
  auto r = call({"info"}, R"({"kind":"metric","points":["a","b","c"],"d":[[0,1,3],[1,0,1],[3,1,0]]})");
  CHECK(r.status != 0);
  CHECK(r.err.find("triangle") != std::string::npos);
}

TEST_CASE("every builder parses, validates and passes verify") {
  for (auto const& name : builder_names()) {
    INFO(name);
    auto doc = builder_document(name);
    REQUIRE_NOTHROW(parse_input(doc));
    auto r = call({"verify"}, doc);
    CHECK(r.status == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("homology of the 2-sphere") {
  auto r = call({"homology", "--max-degree", "2"}, R"({"kind":"sphere","n":2})");
  REQUIRE(r.status == 0);
  CHECK(r.out == "sphere\n  MH_0 = Z\n  MH_1 = 0\n  MH_2 = Z\n");
}

TEST_CASE("diag and tot give identical JSON") {
  for (auto const& name : builder_names()) {
    INFO(name);
    auto doc = builder_document(name);
    // diagonals of 2-categories and of S3 at degree 3 take seconds; the
    // acceptance run covers them
    std::string const top  = name.starts_with("s3-") ? "1" : "2";
    auto              tot  = call({"homology", "--output", "json", "--max-degree", top, "--route", "tot"}, doc);
    auto              diag = call({"homology", "--output", "json", "--max-degree", top, "--route", "diag"}, doc);
    auto norm = call({"homology", "--output", "json", "--max-degree", top, "--route", "diag", "--normalize-rows"}, doc);
    REQUIRE(tot.status == 0);
    CHECK(tot.out == diag.out);
    CHECK(tot.out == norm.out);
  }
}

TEST_CASE("reruns are byte-identical") {
  auto a = call({"homology", "--output", "json", "--all-gradings"}, kS3WordNorm);
  auto b = call({"homology", "--output", "json", "--all-gradings"}, kS3WordNorm);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("JSON torsion and gradings") {
  auto r = call({"homology", "--output", "json", "--grading", "0", "--max-degree", "1"}, kS3WordNorm);
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"grading\": \"0\"") != std::string::npos);
  CHECK(r.out.find("\"torsion\": [\n            2\n          ]") != std::string::npos);
}

TEST_CASE("verify on the S3 word norm") {
  auto r = call({"verify"}, kS3WordNorm);
  CHECK(r.status == 0);
  CHECK(r.out.find("Thm MH_normed_gps: PASS (ℓ∈{1,2}, degree 2)") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}, "").status != 0);
  CHECK(call({"homology", "--route", "sideways"}, R"({"kind":"sphere","n":1})").status != 0);
  auto r = call({"homology", "--grading", "1"}, R"({"kind":"sphere","n":1})");
  CHECK(r.status == 2);
  CHECK(call({"builders", "nope"}, "").status == 2);
  CHECK(call({"builders"}, "").out.find("sphere-2") != std::string::npos);
}
