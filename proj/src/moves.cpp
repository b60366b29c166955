#include "hurwitz/moves.hpp"

#include <map>
#include <utility>

#include "hurwitz/errors.hpp"
#include "hurwitz/union_find.hpp"

namespace hurwitz {

namespace {

// Moves must preserve connectivity; a change would be an algebra bug here.
ConstellationPair checked(const ConstellationPair& before, ConstellationPair after) {
  if (is_transitive(before) != is_transitive(after))
    throw InternalError("move application changed transitivity");
  return after;
}

enum class Elementary { Swap, Rotate };

struct WordEntry {
  std::array<int, 3> role;
  std::vector<Elementary> word;  // applied left to right
};

// The six slot permutations and one fixed realizing word each.
const std::vector<WordEntry>& word_table() {
  static const std::vector<WordEntry> table = {
      {{0, 1, 2}, {}},
      {{1, 0, 2}, {Elementary::Swap}},
      {{0, 2, 1}, {Elementary::Swap, Elementary::Rotate}},
      {{2, 1, 0}, {Elementary::Rotate, Elementary::Swap}},
      {{1, 2, 0}, {Elementary::Rotate}},
      {{2, 0, 1}, {Elementary::Rotate, Elementary::Rotate}},
  };
  return table;
}

}  // namespace

ConstellationPair swap_colours(const ConstellationPair& pair) {
  // recolouring keeps the embedded graph: new black rotation is beta, and the
  // companion is normalized so the product alpha*beta, hence gamma, is kept
  return checked(pair,
                 ConstellationPair(pair.beta(), conjugate(pair.alpha(), inverse(pair.beta()))));
}

ConstellationPair rotate_roles(const ConstellationPair& pair) {
  return checked(pair, ConstellationPair(pair.beta(), pair.gamma()));
}

ConstellationPair mirror(const ConstellationPair& pair) {
  return checked(pair, ConstellationPair(inverse(pair.alpha()), inverse(pair.beta())));
}

MoveElement compose(const MoveElement& first, const MoveElement& then) {
  MoveElement out;
  for (int i = 0; i < 3; ++i) out.role_perm[i] = first.role_perm[then.role_perm[i]];
  out.mirrored = first.mirrored != then.mirrored;
  return out;
}

std::vector<MoveElement> all_move_elements() {
  std::vector<MoveElement> out;
  for (const bool mirrored : {false, true})
    for (const auto& entry : word_table()) out.push_back(MoveElement{entry.role, mirrored});
  return out;
}

ConstellationPair apply_move(const ConstellationPair& pair, const MoveElement& elem) {
  const WordEntry* entry = nullptr;
  for (const auto& e : word_table())
    if (e.role == elem.role_perm) {
      entry = &e;
      break;
    }
  if (entry == nullptr) throw InternalError("move element has an invalid slot permutation");
  ConstellationPair out = pair;
  for (const Elementary op : entry->word)
    out = (op == Elementary::Swap) ? swap_colours(out) : rotate_roles(out);
  if (elem.mirrored) out = mirror(out);
  return out;
}

std::vector<MoveElement> stabilizer_moves(const BranchDatum& datum, bool include_mirror) {
  if (datum.partition_count() != 3)
    throw IncompatibleDatum("moves require exactly three branching partitions");
  const auto& pis = datum.partitions();
  std::vector<MoveElement> out;
  for (const MoveElement& elem : all_move_elements()) {
    if (elem.mirrored && !include_mirror) continue;
    bool fixes = true;
    for (int i = 0; i < 3; ++i)
      if (pis[elem.role_perm[i]] != pis[i]) fixes = false;
    if (fixes) out.push_back(elem);
  }
  return out;
}

namespace {

OrbitPartition move_orbits(const std::vector<ConstellationPair>& rigid_reps,
                           const BranchDatum& datum, bool include_mirror) {
  const int n = static_cast<int>(rigid_reps.size());
  OrbitPartition result;
  result.orbit_of.assign(n, -1);
  if (n == 0) return result;

  std::map<RigidClassKey, int> index_of;
  for (int i = 0; i < n; ++i) index_of.emplace(class_key(rigid_reps[i]), i);
  if (static_cast<int>(index_of.size()) != n)
    throw InternalError("rigid representatives are not pairwise distinct classes");

  const auto moves = stabilizer_moves(datum, include_mirror);
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (const MoveElement& elem : moves) {
      const ConstellationPair image = apply_move(rigid_reps[i], elem);
      const auto it = index_of.find(class_key(image));
      if (it == index_of.end())
        throw InternalError("move image escaped the rigid class list of its own datum");
      uf.unite(i, it->second);
    }
  }
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(i);
    if (result.orbit_of[root] < 0)
      result.orbit_of[root] = static_cast<int>(result.orbit_count++);
    result.orbit_of[i] = result.orbit_of[root];
  }
  return result;
}

}  // namespace

OrbitPartition count_flexible(const std::vector<ConstellationPair>& rigid_reps,
                              const BranchDatum& datum) {
  return move_orbits(rigid_reps, datum, false);
}

OrbitPartition count_very_flexible(const std::vector<ConstellationPair>& rigid_reps,
                                   const BranchDatum& datum) {
  return move_orbits(rigid_reps, datum, true);
}

}  // namespace hurwitz
