#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/datum.hpp"

namespace hurwitz {

// The dessin moves, acting on constellation pairs. Each elementary move keeps
// the underlying graph-on-surface and permutes the three roles (black, white,
// face); mirror reverses the orientation. On cycle-type triples the moves
// generate the symmetric group on the three slots, and together with mirror a
// group of 12 elements. Applied to a class of pairs, a composite's effect
// depends only on its slot permutation and mirror flag, so each composite is
// represented by one MoveElement.

// swap_colours: (alpha, beta) -> (beta, beta^-1 alpha beta).
// Types (p1,p2,p3) -> (p2,p1,p3); the product alpha*beta, hence gamma, is
// unchanged. Applying it twice conjugates the pair by gamma.
ConstellationPair swap_colours(const ConstellationPair& pair);

// rotate_roles: (alpha, beta) -> (beta, gamma); the new derived third
// permutation is exactly alpha. Types rotate (p1,p2,p3) -> (p2,p3,p1), and
// three applications give back the identical pair.
ConstellationPair rotate_roles(const ConstellationPair& pair);

// mirror: (alpha, beta) -> (alpha^-1, beta^-1); the new derived gamma is
// beta*alpha, conjugate to gamma^-1. Types are unchanged; an involution.
ConstellationPair mirror(const ConstellationPair& pair);

// A composite move: new_type[i] = old_type[role_perm[i]], plus a mirror flag.
struct MoveElement {
  std::array<int, 3> role_perm{0, 1, 2};
  bool mirrored = false;
  friend bool operator==(const MoveElement&, const MoveElement&) = default;
};

// Applying first, then then.
MoveElement compose(const MoveElement& first, const MoveElement& then);

// All 12 composites, identity first; they form a group under compose.
std::vector<MoveElement> all_move_elements();

// Realizes the element as a fixed word in the elementary moves (mirror last).
ConstellationPair apply_move(const ConstellationPair& pair, const MoveElement& elem);

// The composites whose slot permutation fixes the datum's ordered partition
// triple, i.e. exactly those that keep pairs of this datum inside the datum.
// With include_mirror each element also appears mirrored.
std::vector<MoveElement> stabilizer_moves(const BranchDatum& datum, bool include_mirror);

// Orbits of rigid class representatives under a move set; orbit ids are
// numbered by first appearance along the given representative order.
struct OrbitPartition {
  std::int64_t orbit_count = 0;
  std::vector<int> orbit_of;  // rigid class index -> orbit id
};

// Orbits under stabilizer_moves(datum, false): covers counted up to
// orientation-preserving equivalence in both surfaces.
OrbitPartition count_flexible(const std::vector<ConstellationPair>& rigid_reps,
                              const BranchDatum& datum);

// Orbits under stabilizer_moves(datum, true): mirror images identified too.
OrbitPartition count_very_flexible(const std::vector<ConstellationPair>& rigid_reps,
                                   const BranchDatum& datum);

}  // namespace hurwitz
