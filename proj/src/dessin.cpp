#include "hurwitz/dessin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Every edge must sit in exactly one cycle; returns edge -> cycle index.
std::vector<int> owner_table(const std::vector<std::vector<int>>& cycles, int degree,
                             const char* what) {
  std::vector<int> owner(degree, -1);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].empty()) throw ParseError(std::string(what) + ": empty cycle");
    for (int e : cycles[i]) {
      if (e < 0 || e >= degree) throw ParseError(std::string(what) + ": edge out of range");
      if (owner[e] != -1) throw ParseError(std::string(what) + ": edge listed twice");
      owner[e] = static_cast<int>(i);
    }
  }
  for (int e = 0; e < degree; ++e)
    if (owner[e] == -1) throw ParseError(std::string(what) + ": edge missing");
  return owner;
}

bool euler_holds(const CombinatorialMap& m) {
  const int chi = static_cast<int>(m.black.size()) + static_cast<int>(m.white.size()) -
                  m.degree + static_cast<int>(m.faces.size());
  return chi == 2 - 2 * m.genus;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ' ';
    os << xs[i];
  }
  return os.str();
}

}  // namespace

CombinatorialMap to_map(const ConstellationPair& pair, const BranchDatum& datum) {
  if (datum.partition_count() != 3)
    throw IncompatibleDatum("maps require exactly three branching partitions");
  CombinatorialMap m;
  m.degree = pair.degree();
  m.black = cycles_of(pair.alpha());
  m.white = cycles_of(pair.beta());
  m.faces = cycles_of(pair.gamma());
  m.genus = datum.cover_genus();
  const auto& pis = datum.partitions();
  if (cycle_type(pair.alpha()) != pis[0] || cycle_type(pair.beta()) != pis[1] ||
      cycle_type(pair.gamma()) != pis[2])
    throw InternalError("map construction: pair does not realize the datum");
  if (!euler_holds(m)) throw InternalError("map construction: Euler relation violated");
  return m;
}

namespace {

// Vertex names are assigned by least incident edge, independent of the order
// the cycles were listed in.
std::vector<int> naming_order(const std::vector<std::vector<int>>& cycles) {
  std::vector<int> order(cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return *std::min_element(cycles[i].begin(), cycles[i].end()) <
           *std::min_element(cycles[j].begin(), cycles[j].end());
  });
  return order;
}

}  // namespace

std::string emit_dot(const CombinatorialMap& map) {
  const std::vector<int> black_of = owner_table(map.black, map.degree, "black");
  const std::vector<int> white_of = owner_table(map.white, map.degree, "white");
  const std::vector<int> black_order = naming_order(map.black);
  const std::vector<int> white_order = naming_order(map.white);
  std::vector<int> black_name(map.black.size()), white_name(map.white.size());
  for (std::size_t i = 0; i < black_order.size(); ++i) black_name[black_order[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < white_order.size(); ++i) white_name[white_order[i]] = static_cast<int>(i);
  std::ostringstream os;
  os << "graph dessin {\n";
  os << "  // degree " << map.degree << ", genus " << map.genus << "\n";
  os << "  node [shape=circle, fixedsize=true, width=0.3];\n";
  for (std::size_t i = 0; i < black_order.size(); ++i)
    os << "  b" << i << " [style=filled, fillcolor=black, fontcolor=white, rot=\""
       << join(map.black[black_order[i]]) << "\"];\n";
  for (std::size_t i = 0; i < white_order.size(); ++i)
    os << "  w" << i << " [rot=\"" << join(map.white[white_order[i]]) << "\"];\n";
  for (int e = 0; e < map.degree; ++e)
    os << "  b" << black_name[black_of[e]] << " -- w" << white_name[white_of[e]]
       << " [label=" << e << "];\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const CombinatorialMap& map) {
  nlohmann::json j;
  j["degree"] = map.degree;
  j["black"] = map.black;
  j["white"] = map.white;
  j["faces"] = map.faces;
  j["genus"] = map.genus;
  return j.dump(2) + "\n";
}

CombinatorialMap parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("map json: ") + e.what());
  }
  CombinatorialMap m;
  try {
    m.degree = j.at("degree").get<int>();
    m.black = j.at("black").get<std::vector<std::vector<int>>>();
    m.white = j.at("white").get<std::vector<std::vector<int>>>();
    m.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    m.genus = j.at("genus").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("map json: ") + e.what());
  }
  if (m.degree < 1) throw ParseError("map json: degree must be positive");
  if (m.genus < 0) throw ParseError("map json: genus must be non-negative");
  owner_table(m.black, m.degree, "black");
  owner_table(m.white, m.degree, "white");
  owner_table(m.faces, m.degree, "faces");
  if (!euler_holds(m)) throw ParseError("map json: Euler relation violated");
  return m;
}

}  // namespace hurwitz
