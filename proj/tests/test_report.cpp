#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include <json.hpp>

#include "hurwitz/datum.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/report.hpp"

using namespace hurwitz;

namespace {

BranchDatum datum(const std::string& text) { return parse_datum(text); }

std::map<std::string, std::int64_t> as_map(
    const std::vector<std::pair<std::string, std::int64_t>>& table) {
  return {table.begin(), table.end()};
}

}  // namespace

TEST_CASE("the twelve labels collapse onto the three counts") {
  const auto table = twelve_table(9, 6, 4);
  REQUIRE(table.size() == 12);
  const std::vector<std::string> order = {"R",     "R_+",    "R_*",    "R_*+",
                                          "R^+",   "R_+^+",  "R_*^+",  "R_*+^+",
                                          "R_*^*", "R_*+^*", "R_*^*+", "R_*+^*+"};
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(table[i].first == order[i]);

  const auto values = as_map(table);
  CHECK(values.at("R") == 4);
  CHECK(values.at("R_+") == 4);
  CHECK(values.at("R_*") == 4);
  CHECK(values.at("R_*+") == 4);
  CHECK(values.at("R^+") == 12);
  CHECK(values.at("R_+^+") == 6);
  CHECK(values.at("R_*^+") == 12);
  CHECK(values.at("R_*+^+") == 6);
  CHECK(values.at("R_*^*") == 9);
  CHECK(values.at("R_*+^*") == 9);
  CHECK(values.at("R_*^*+") == 18);
  CHECK(values.at("R_*+^*+") == 9);
}

TEST_CASE("all-zero counts give an all-zero table") {
  for (const auto& [label, value] : twelve_table(0, 0, 0)) {
    CAPTURE(label);
    CHECK(value == 0);
  }
}

TEST_CASE("equal counts double only the three doubled labels") {
  const auto values = as_map(twelve_table(3, 3, 3));
  int threes = 0, sixes = 0;
  for (const auto& [label, value] : values) {
    if (value == 3) ++threes;
    if (value == 6) ++sixes;
  }
  CHECK(threes == 9);
  CHECK(sixes == 3);
  CHECK(values.at("R^+") == 6);
  CHECK(values.at("R_*^+") == 6);
  CHECK(values.at("R_*^*+") == 6);
}

TEST_CASE("count order violations signal an upstream bug") {
  CHECK_THROWS_AS(twelve_table(3, 4, 0), InternalError);
  CHECK_THROWS_AS(twelve_table(1, 2, 3), InternalError);
  CHECK_THROWS_AS(twelve_table(-1, -1, -1), InternalError);
  CHECK_THROWS_AS(twelve_table(1, 1, 0), InternalError);  // must vanish together
  CHECK_NOTHROW(twelve_table(1, 1, 1));
}

TEST_CASE("analyze_datum assembles the full census report") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const DatumAnalysis analysis = analyze_datum(d);
  CHECK(analysis.report.rigid == 9);
  CHECK(analysis.report.flexible == 6);
  CHECK(analysis.report.very_flexible == 4);
  CHECK(analysis.report.genus == 0);
  CHECK_FALSE(analysis.report.degenerate);
  CHECK(analysis.classes.size() == 9);
  CHECK(analysis.flexible_orbits.orbit_of.size() == 9);
  CHECK(analysis.very_flexible_orbits.orbit_of.size() == 9);
  CHECK(analysis.report.table == twelve_table(9, 6, 4));
}

TEST_CASE("table text is deterministic and carries the headline counts") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const DatumAnalysis analysis = analyze_datum(d);
  const std::string text = format_report_table(d, analysis.report);
  CHECK(text == format_report_table(d, analysis.report));
  CHECK(text.find("datum: 7; 3,2,1,1; 3,2,1,1; 7") != std::string::npos);
  CHECK(text.find("rigid: 9") != std::string::npos);
  CHECK(text.find("flexible: 6") != std::string::npos);
  CHECK(text.find("very flexible: 4") != std::string::npos);
  CHECK(text.find("R_*^*+") != std::string::npos);
  CHECK(text.find("18") != std::string::npos);
  CHECK(text.find("legend") != std::string::npos);
}

TEST_CASE("JSON report carries the full schema with sorted keys") {
  const BranchDatum d = datum("7; 3,2,1,1; 3,2,1,1; 7");
  const DatumAnalysis analysis = analyze_datum(d);
  const std::string text = format_report_json(analysis);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("datum") == "7; 3,2,1,1; 3,2,1,1; 7");
  CHECK(j.at("degree") == 7);
  CHECK(j.at("genus") == 0);
  CHECK(j.at("degenerate") == false);
  CHECK(j.at("counts").at("rigid") == 9);
  CHECK(j.at("counts").at("flexible") == 6);
  CHECK(j.at("counts").at("very_flexible") == 4);
  CHECK(j.at("table").at("R^+") == 12);
  CHECK(j.at("table").at("R_*^*+") == 18);
  CHECK(j.at("partitions") ==
        nlohmann::json::parse("[[3,2,1,1],[3,2,1,1],[7]]"));

  // The two orbit maps assign every rigid class an orbit id, and the ids
  // match the quotient counts computed in the analysis.
  const nlohmann::json& flex = j.at("flexible_orbits");
  const nlohmann::json& very = j.at("very_flexible_orbits");
  REQUIRE(flex.size() == 9);
  REQUIRE(very.size() == 9);
  std::set<int> flex_ids;
  std::set<int> very_ids;
  for (int i = 0; i < 9; ++i) {
    const std::string key = std::to_string(i);
    CHECK(flex.at(key) == analysis.flexible_orbits.orbit_of[static_cast<std::size_t>(i)]);
    CHECK(very.at(key) == analysis.very_flexible_orbits.orbit_of[static_cast<std::size_t>(i)]);
    flex_ids.insert(flex.at(key).get<int>());
    very_ids.insert(very.at(key).get<int>());
  }
  CHECK(flex_ids.size() == 6);
  CHECK(very_ids.size() == 4);
}

TEST_CASE("degree-4 scan isolates the exceptional datum") {
  const std::vector<ScanEntry> entries = scan_degree(4);
  REQUIRE(entries.size() == 8);
  int exceptional = 0;
  for (const ScanEntry& entry : entries) {
    if (!entry.exceptional) {
      CHECK(entry.report.rigid > 0);
      continue;
    }
    ++exceptional;
    CHECK(to_string(entry.datum) == "4; 3,1; 2,2; 2,2");
    CHECK(entry.report.rigid == 0);
    CHECK(entry.report.flexible == 0);
    CHECK(entry.report.very_flexible == 0);
  }
  CHECK(exceptional == 1);
}

TEST_CASE("scan output puts exceptional data before the summary line") {
  const std::vector<ScanEntry> entries = scan_degree(4);
  const std::string text = format_scan(4, entries);
  const std::size_t exceptional_pos = text.find("exceptional: 4; 3,1; 2,2; 2,2");
  const std::size_t first_realizable = text.find("realizable:");
  const std::size_t summary = text.find("exceptional: 1 / total: 8");
  REQUIRE(exceptional_pos != std::string::npos);
  REQUIRE(first_realizable != std::string::npos);
  REQUIRE(summary != std::string::npos);
  CHECK(exceptional_pos < first_realizable);
  CHECK(first_realizable < summary);
}

TEST_CASE("scan results are independent of the worker count") {
  const std::string one = format_scan(5, scan_degree(5, 1));
  const std::string four = format_scan(5, scan_degree(5, 4));
  CHECK(one == four);
  CHECK(one.find("exceptional: 0 / total:") != std::string::npos);
}
