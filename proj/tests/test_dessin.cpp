#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "hurwitz/constellation.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/dessin.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

namespace {

BranchDatum datum(const std::string& text) { return parse_datum(text); }

}  // namespace

TEST_CASE("the degree-2 dessin is a doubled edge between two vertices") {
  const BranchDatum d = datum("2; 2; 2; 1,1");
  const std::vector<ConstellationPair> classes = enumerate_rigid_classes(d);
  REQUIRE(classes.size() == 1);
  const CombinatorialMap map = to_map(classes.front(), d);
  CHECK(map.degree == 2);
  CHECK(map.black == std::vector<std::vector<int>>{{0, 1}});
  CHECK(map.white == std::vector<std::vector<int>>{{0, 1}});
  CHECK(map.faces == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(map.genus == 0);
}

TEST_CASE("census dessins have one face of length seven") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  for (const ConstellationPair& pair : enumerate_rigid_classes(d)) {
    const CombinatorialMap map = to_map(pair, d);
    CHECK(map.black.size() == 4);
    CHECK(map.white.size() == 4);
    REQUIRE(map.faces.size() == 1);
    CHECK(map.faces.front().size() == 7);
    CHECK(map.genus == 0);
    // Euler: #black + #white - edges + #faces = 2 - 2g
    CHECK(static_cast<int>(map.black.size() + map.white.size() + map.faces.size()) -
              map.degree ==
          2 - 2 * map.genus);
  }
}

TEST_CASE("a torus dessin carries genus one") {
  const BranchDatum d = datum("3; 3; 3; 3");
  const std::vector<ConstellationPair> classes = enumerate_rigid_classes(d);
  REQUIRE(classes.size() == 1);
  const CombinatorialMap map = to_map(classes.front(), d);
  CHECK(map.genus == 1);
  CHECK(map.black.size() == 1);
  CHECK(map.white.size() == 1);
  CHECK(map.faces.size() == 1);
}

TEST_CASE("to_map rejects a pair that does not realize the datum") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const BranchDatum other = datum("7; 7; 4,1,1,1; 3,2,1,1");
  const ConstellationPair pair = enumerate_rigid_classes(d).front();
  CHECK_THROWS_AS(to_map(pair, other), InternalError);
}

TEST_CASE("DOT output is byte-deterministic and distinct per class") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const std::vector<ConstellationPair> classes = enumerate_rigid_classes(d);
  std::set<std::string> outputs;
  for (const ConstellationPair& pair : classes) {
    const CombinatorialMap map = to_map(pair, d);
    const std::string once = emit_dot(map);
    CHECK(emit_dot(map) == once);
    outputs.insert(once);
  }
  CHECK(outputs.size() == classes.size());
}

TEST_CASE("DOT output shape") {
  const BranchDatum d = datum("2; 2; 2; 1,1");
  const CombinatorialMap map = to_map(enumerate_rigid_classes(d).front(), d);
  const std::string dot = emit_dot(map);
  CHECK(dot ==
        "graph dessin {\n"
        "  // degree 2, genus 0\n"
        "  node [shape=circle, fixedsize=true, width=0.3];\n"
        "  b0 [style=filled, fillcolor=black, fontcolor=white, rot=\"0 1\"];\n"
        "  w0 [rot=\"0 1\"];\n"
        "  b0 -- w0 [label=0];\n"
        "  b0 -- w0 [label=1];\n"
        "}\n");
}

TEST_CASE("DOT vertex names follow the least incident edge, not the list order") {
  CombinatorialMap map;
  map.degree = 2;
  map.black = {{1}, {0}};  // listed out of order on purpose
  map.white = {{0, 1}};
  map.faces = {{0, 1}};
  map.genus = 0;
  const std::string dot = emit_dot(map);
  CHECK(dot.find("b0 [style=filled, fillcolor=black, fontcolor=white, rot=\"0\"]") !=
        std::string::npos);
  CHECK(dot.find("b1 [style=filled, fillcolor=black, fontcolor=white, rot=\"1\"]") !=
        std::string::npos);
}

TEST_CASE("JSON round-trips exactly") {
  const BranchDatum d = datum("7; 3,3,1; 3,3,1; 4,2,1");
  for (const ConstellationPair& pair : enumerate_rigid_classes(d)) {
    const CombinatorialMap map = to_map(pair, d);
    CHECK(parse_json(emit_json(map)) == map);
  }
}

TEST_CASE("JSON parsing validates structure") {
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"degree":2,"black":[[0,1]],"white":[[0,1]],"faces":[[0],[1]]})"),
                  ParseError);  // genus missing
  CHECK_THROWS_AS(
      parse_json(
          R"({"degree":2,"black":[[0,2]],"white":[[0,1]],"faces":[[0],[1]],"genus":0})"),
      ParseError);  // edge out of range
  CHECK_THROWS_AS(
      parse_json(
          R"({"degree":2,"black":[[0,0]],"white":[[0,1]],"faces":[[0],[1]],"genus":0})"),
      ParseError);  // edge repeated
  CHECK_THROWS_AS(
      parse_json(R"({"degree":2,"black":[[0]],"white":[[0,1]],"faces":[[0],[1]],"genus":0})"),
      ParseError);  // edge missing
  CHECK_THROWS_AS(
      parse_json(
          R"({"degree":2,"black":[[0,1]],"white":[[0,1]],"faces":[[0],[1]],"genus":1})"),
      ParseError);  // Euler relation violated
  CHECK_NOTHROW(parse_json(
      R"({"degree":2,"black":[[0,1]],"white":[[0,1]],"faces":[[0],[1]],"genus":0})"));
}
