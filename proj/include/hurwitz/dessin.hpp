#pragma once

#include <string>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/datum.hpp"

namespace hurwitz {

// The bipartite graph-on-surface view of a constellation pair: edges are the
// points 0..d-1, black vertices are the cycles of alpha, white vertices the
// cycles of beta, faces the cycles of gamma. Each vertex or face carries its
// rotation (cyclic edge order). Euler's relation ties the pieces together:
//   #black + #white - d + #faces = 2 - 2g.
struct CombinatorialMap {
  int degree = 0;
  std::vector<std::vector<int>> black;  // cycles, each starting at its least edge
  std::vector<std::vector<int>> white;
  std::vector<std::vector<int>> faces;
  int genus = 0;

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;
};

// Builds the map of a pair realizing the datum; the genus comes from the
// datum and is re-verified against Euler's relation (a mismatch is a bug).
CombinatorialMap to_map(const ConstellationPair& pair, const BranchDatum& datum);

// Graphviz text: an undirected multigraph with black nodes filled and white
// nodes hollow, one edge per dessin edge, and each vertex's rotation recorded
// in order in its "rot" attribute so the embedding is recoverable. Vertices
// are named b0,b1,.../w0,w1,... by least incident edge. Byte-deterministic.
std::string emit_dot(const CombinatorialMap& map);

// JSON document with fields degree, black, white, faces, genus (sorted keys).
// parse_json(emit_json(m)) reproduces m exactly.
std::string emit_json(const CombinatorialMap& map);
CombinatorialMap parse_json(const std::string& text);

}  // namespace hurwitz
