#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "equicount/cli.hpp"
#include "equicount/json_io.hpp"

using namespace equicount;
using io::json;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream os;
  const int code = cli::run(args, os);
  return {code, os.str()};
}

json parse(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("help exits zero and lists every command") {
  const auto r = invoke({"help"});
  CHECK(r.exit_code == 0);
  for (const char* cmd :
       {"group-info", "marks", "burnside-eval", "char-eval", "euler",
        "count-blowup", "welschinger", "count-masses", "count-abelian-k",
        "hom-bundle"})
    CHECK(r.out.find(cmd) != std::string::npos);
  CHECK(invoke({"--help"}).exit_code == 0);
  // Bare invocation is a usage error, not silent success.
  const auto bare = invoke({});
  CHECK(bare.exit_code == 2);
  CHECK(parse(bare.out)["path"] == "/command");
}

TEST_CASE("welschinger golden output") {
  const auto r = invoke({"welschinger", "--n1", "8"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n"
        "  \"rank\": 12,\n"
        "  \"welschinger\": 8,\n"
        "  \"countA\": {\n"
        "    \"basis\": [\n"
        "      {\n"
        "        \"subgroup\": 0,\n"
        "        \"coeff\": 10\n"
        "      },\n"
        "      {\n"
        "        \"subgroup\": 1,\n"
        "        \"coeff\": -8\n"
        "      }\n"
        "    ]\n"
        "  },\n"
        "  \"countR\": {\n"
        "    \"classes\": [\n"
        "      \"12\",\n"
        "      \"-8\"\n"
        "    ]\n"
        "  },\n"
        "  \"fixedCounts\": [\n"
        "    12,\n"
        "    -8\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("welschinger values across the admissible range") {
  for (int n1 : {0, 2, 4, 6, 8}) {
    const auto r = invoke({"welschinger", "--n1", std::to_string(n1)});
    REQUIRE(r.exit_code == 0);
    const json j = parse(r.out);
    CHECK(j["rank"] == 12);
    CHECK(j["welschinger"] == n1);
  }
}

TEST_CASE("marks golden output, shorthand and JSON spellings agree") {
  const auto a = invoke({"marks", "--group", "cyclic2"});
  const auto b =
      invoke({"marks", "--group", R"({"kind":"named","name":"cyclic","n":2})"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json j = parse(a.out);
  CHECK(j["matrix"] == json::parse("[[2,0],[1,1]]"));
  CHECK(j["subgroups"] == json::parse(R"(["e","G"])"));
}

TEST_CASE("marks pretty table is aligned text") {
  const auto r = invoke({"marks", "--group", "cyclic2", "--output", "pretty"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("e") != std::string::npos);
  CHECK(r.out.find("G") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("hom-bundle golden") {
  const auto r = invoke({"hom-bundle", "--group", "trivial", "--v2",
                         "trivial3"});
  CHECK(r.exit_code == 0);
  const json j = parse(r.out);
  CHECK(j["rank"] == 12);
  CHECK(j["termRanks"] ==
        json::parse(R"({"line":1,"tangent":-9,"unit":1,"det":1})"));
  CHECK(j["countR"]["classes"] == json::parse(R"(["12"])"));
}

TEST_CASE("pretty welschinger report") {
  const auto r = invoke({"welschinger", "--n1", "8", "--output", "pretty"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "rank: 12\n"
        "welschinger: 8\n"
        "countA: -8[G/G] + 10[G]\n"
        "fixedCounts: (12, -8)\n"
        "countR: (12, -8)\n");
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args = {
      "count-abelian-k", "--payload",
      R"({"group":"cyclic3","v":"0;1;2","base":{"orbits":[)"
      R"({"subgroup":1,"multiplicity":1,"line":0},)"
      R"({"subgroup":1,"multiplicity":1,"line":1},)"
      R"({"subgroup":0,"multiplicity":2,"line":"free"}],"ninthLine":2}})"};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json j = parse(a.out);
  CHECK(j["rank"] == 12);
  CHECK(j["countR"]["classes"] == json::parse(R"(["12","-6","-6"])"));
}

TEST_CASE("ambient tangent mode reports rank 21 with a warning") {
  const auto r = invoke({
      "count-abelian-k", "--tangent-mode", "ambient", "--payload",
      R"({"group":"cyclic3","v":"0;1;2","base":{"orbits":[)"
      R"({"subgroup":1,"multiplicity":1,"line":0},)"
      R"({"subgroup":1,"multiplicity":1,"line":1},)"
      R"({"subgroup":0,"multiplicity":2,"line":"free"}],"ninthLine":2}})"});
  CHECK(r.exit_code == 0);
  const json j = parse(r.out);
  CHECK(j["rank"] == 21);
  CHECK(j["countR"]["classes"] == json::parse(R"(["21","-3","-3"])"));
  REQUIRE(j.contains("warnings"));
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("count-masses census flags") {
  const auto r = invoke({"count-masses", "--group", "cyclic2", "--split", "8",
                         "--pairs", "2"});
  CHECK(r.exit_code == 0);
  const json j = parse(r.out);
  CHECK(j["rank"] == 12);
  CHECK(j["welschinger"] == 8);
  CHECK(j["countA"]["basis"] ==
        json::parse(R"([{"subgroup":0,"coeff":10},{"subgroup":1,"coeff":-8}])"));

  const auto r2 = invoke({"count-masses", "--group", "cyclic2", "--nonsplit",
                          "4", "--pairs", "4"});
  const json j2 = parse(r2.out);
  CHECK(j2["countA"]["basis"] ==
        json::parse(R"([{"subgroup":0,"coeff":4},{"subgroup":1,"coeff":4}])"));
  CHECK(j2["welschinger"] == -4);
}

TEST_CASE("euler model golden") {
  const auto r = invoke({"euler", "--model", "Cp2Conj", "--group", "cyclic2"});
  CHECK(r.exit_code == 0);
  const json j = parse(r.out);
  CHECK(j["fixed"] == json::parse("[3,1]"));
  CHECK(j["pretty"] == "[G/G] + [G]");
  CHECK(j["eulerK"]["classes"] == json::parse(R"(["3","1"])"));
}

TEST_CASE("emitted JSON re-parses to the same values") {
  SUBCASE("Burnside element round-trip") {
    const auto r = invoke({"welschinger", "--n1", "8"});
    const json j = parse(r.out);
    auto G = named_group("cyclic", 2);
    const auto countA = io::parse_burnside(G, j["countA"], "/countA");
    CHECK(countA.coeffs == std::vector<long long>{10, -8});
    CHECK(io::burnside_to_json(countA) == j["countA"]);
  }
  SUBCASE("class function round-trip") {
    const auto r = invoke({"euler", "--model", "Cp2Conj", "--group",
                           "cyclic2"});
    const json j = parse(r.out);
    auto G = named_group("cyclic", 2);
    const auto chi = io::parse_classfn(G, j["eulerK"], "/eulerK");
    CHECK(chi.values == std::vector<Cyclo>{Cyclo(3), Cyclo(1)});
    CHECK(io::classfn_to_json(chi) == j["eulerK"]);
  }
}

TEST_CASE("payload file and inline overlay") {
  const std::string path = "/tmp/equicount_cli_test_payload.json";
  {
    std::ofstream f(path);
    f << R"({"group":"cyclic2","n1":0})";
  }
  const auto base = invoke({"welschinger", "--file", path});
  CHECK(base.exit_code == 0);
  CHECK(parse(base.out)["welschinger"] == 0);
  // Inline payload and flags override the file.
  const auto overlaid =
      invoke({"welschinger", "--file", path, "--payload", R"({"n1":4})"});
  CHECK(parse(overlaid.out)["welschinger"] == 4);
  const auto flagged = invoke({"welschinger", "--file", path, "--n1", "6"});
  CHECK(parse(flagged.out)["welschinger"] == 6);
  std::remove(path.c_str());

  const auto missing = invoke({"welschinger", "--file", "/tmp/no_such.json"});
  CHECK(missing.exit_code == 2);
}

TEST_CASE("validation errors carry code, message, and path") {
  SUBCASE("odd point split") {
    const auto r = invoke({"welschinger", "--n1", "3"});
    CHECK(r.exit_code == 2);
    const json j = parse(r.out);
    CHECK(j["code"] == "InvalidPointSplit");
    CHECK(j["path"] == "/n1");
  }
  SUBCASE("base locus that does not cover eight points") {
    const auto r = invoke({
        "count-abelian-k", "--payload",
        R"({"group":"cyclic3","v":"0;1;2","base":{"orbits":[)"
        R"({"subgroup":1,"multiplicity":1,"line":0}],"ninthLine":2}})"});
    CHECK(r.exit_code == 2);
    const json j = parse(r.out);
    CHECK(j["code"] == "InvalidBaseLocus");
    CHECK(j["path"] == "/base");
    const std::string msg = j["message"];
    CHECK(msg.find("B = S + {*}") != std::string::npos);
  }
  SUBCASE("fixed orbit without a line index") {
    const auto r = invoke({
        "count-abelian-k", "--payload",
        R"({"group":"cyclic3","v":"0;1;2","base":{"orbits":[)"
        R"({"subgroup":1,"multiplicity":1},)"
        R"({"subgroup":1,"multiplicity":1,"line":1},)"
        R"({"subgroup":0,"multiplicity":2,"line":"free"}],"ninthLine":2}})"});
    CHECK(r.exit_code == 2);
    CHECK(parse(r.out)["code"] == "MissingLineIndex");
  }
  SUBCASE("unknown command") {
    const auto r = invoke({"frobnicate"});
    CHECK(r.exit_code == 2);
    const json j = parse(r.out);
    CHECK(j["code"] == "UnknownCommand");
    CHECK(j["path"] == "/command");
  }
  SUBCASE("unknown flag") {
    const auto r = invoke({"marks", "--group", "cyclic2", "--bogus", "1"});
    CHECK(r.exit_code == 2);
    CHECK(parse(r.out)["code"] == "SchemaViolation");
  }
  SUBCASE("missing required field names its path") {
    const auto r = invoke({"marks"});
    CHECK(r.exit_code == 2);
    const json j = parse(r.out);
    CHECK(j["code"] == "SchemaViolation");
    CHECK(j["path"] == "/group");
  }
  SUBCASE("malformed inline payload") {
    const auto r = invoke({"marks", "--payload", "{not json"});
    CHECK(r.exit_code == 2);
    CHECK(parse(r.out)["code"] == "SchemaViolation");
  }
  SUBCASE("bad group shorthand") {
    const auto r = invoke({"marks", "--group", "C2"});
    CHECK(r.exit_code == 2);
    const json j = parse(r.out);
    CHECK(j["code"] == "SchemaViolation");
    CHECK(j["path"] == "/group");
  }
  SUBCASE("errors are valid JSON on a single stream") {
    const auto r = invoke({"welschinger", "--n1", "7", "--output", "pretty"});
    CHECK(r.exit_code == 2);
    CHECK_NOTHROW(parse(r.out));
  }
}

TEST_CASE("group-info surfaces structure constants") {
  const auto r = invoke({"group-info", "--group", "symmetric3"});
  CHECK(r.exit_code == 0);
  const json j = parse(r.out);
  CHECK(j["order"] == 6);
  CHECK(j["exponent"] == 6);
  CHECK(j["abelian"] == false);
  CHECK(j["elementClasses"].size() == 3);
  CHECK(j["subgroupClasses"].size() == 4);
  long long conjugate_total = 0;
  for (const auto& row : j["subgroupClasses"])
    conjugate_total += row["conjugates"].get<long long>();
  CHECK(conjugate_total == 6);  // e, 3 reflections, rotation, whole
}

TEST_CASE("burnside-eval operations") {
  SUBCASE("product of basis classes") {
    const auto r = invoke({
        "burnside-eval", "--group", "symmetric3", "--payload",
        R"({"op":"mul","lhs":{"basis":[{"subgroup":1,"coeff":1}]},)"
        R"("rhs":{"basis":[{"subgroup":2,"coeff":1}]}})"});
    CHECK(r.exit_code == 0);
    const json j = parse(r.out);
    CHECK(j["result"]["basis"] ==
          json::parse(R"([{"subgroup":0,"coeff":1}])"));
    CHECK(j["pretty"] == "[G]");
    CHECK(j["cardinality"] == 6);
  }
  SUBCASE("from ghost coordinates") {
    const auto r = invoke({
        "burnside-eval", "--group", "cyclic2", "--payload",
        R"({"op":"frommarks","marks":[12,-8]})"});
    CHECK(r.exit_code == 0);
    const json j = parse(r.out);
    CHECK(j["result"]["basis"] ==
          json::parse(R"([{"subgroup":0,"coeff":10},{"subgroup":1,"coeff":-8}])"));
    CHECK(j["marks"] == json::parse("[12,-8]"));
  }
  SUBCASE("ghost vector outside the mark lattice") {
    const auto r = invoke({
        "burnside-eval", "--group", "cyclic2", "--payload",
        R"({"op":"frommarks","marks":[1,0]})"});
    CHECK(r.exit_code == 1);
    CHECK(parse(r.out)["code"] == "NotInImage");
  }
}

TEST_CASE("char-eval operations") {
  SUBCASE("second symmetric power of a two-dimensional character") {
    const auto r = invoke({
        "char-eval", "--group", "cyclic3", "--payload",
        R"({"op":"sym","k":2,"x":{"classes":["2","-1","-1"]}})"});
    CHECK(r.exit_code == 0);
    const json j = parse(r.out);
    CHECK(j["result"]["classes"] == json::parse(R"(["3","0","0"])"));
    CHECK(j["rank"] == 3);
  }
  SUBCASE("inner product is a scalar") {
    // Standard character of the symmetric group on three letters,
    // class order (identity, transpositions, 3-cycles).
    const auto r = invoke({
        "char-eval", "--group", "symmetric3", "--payload",
        R"({"op":"inner","lhs":{"classes":["2","0","-1"]},)"
        R"("rhs":{"classes":["2","0","-1"]}})"});
    CHECK(r.exit_code == 0);
    CHECK(parse(r.out)["result"] == "1");
  }
  SUBCASE("linearization of a Burnside class") {
    const auto r = invoke({
        "char-eval", "--group", "cyclic2", "--payload",
        R"({"op":"linearize","x":{"basis":[{"subgroup":0,"coeff":1}]}})"});
    CHECK(r.exit_code == 0);
    CHECK(parse(r.out)["result"]["classes"] == json::parse(R"(["2","0"])"));
  }
  SUBCASE("character from a permutation representation") {
    const auto r = invoke({
        "char-eval", "--group", "symmetric3", "--payload",
        R"({"op":"character","rep":{"kind":"permutation","degree":3,)"
        R"("act":[[0,1,2],[1,0,2],[1,2,0],[0,2,1],[2,0,1],[2,1,0]]}})"});
    CHECK(r.exit_code == 0);
    const json j = parse(r.out);
    CHECK(j["result"]["classes"] == json::parse(R"(["3","1","0"])"));
    CHECK(j["rank"] == 3);
  }
}
