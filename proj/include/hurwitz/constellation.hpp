#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hurwitz/datum.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

// A cover of the sphere branched over three points, encoded by its monodromy:
// alpha (cycles = black vertices of the dessin), beta (white vertices) and
// the derived gamma = inverse(compose(alpha, beta)) (faces), so that
// compose(alpha, compose(beta, gamma)) is the identity. The cover is
// connected exactly when <alpha, beta> acts transitively.
class ConstellationPair {
public:
  // gamma is derived here; degrees must match.
  ConstellationPair(Permutation alpha, Permutation beta);

  int degree() const { return alpha_.degree(); }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& beta() const { return beta_; }
  const Permutation& gamma() const { return gamma_; }

  friend bool operator==(const ConstellationPair&, const ConstellationPair&) = default;

private:
  Permutation alpha_, beta_, gamma_;
};

bool is_transitive(const ConstellationPair& pair);

// Canonical byte key of the simultaneous-conjugation class of a pair:
// conjugate by conjugator_to_canonical(alpha), then minimize the serialized
// (alpha, beta) lexicographically over the centralizer of the canonical
// alpha. Two pairs get equal keys exactly when some g conjugates one to the
// other. Keys order deterministically.
struct RigidClassKey {
  std::string bytes;
  friend bool operator==(const RigidClassKey&, const RigidClassKey&) = default;
  friend auto operator<=>(const RigidClassKey&, const RigidClassKey&) = default;
};

RigidClassKey class_key(const ConstellationPair& pair);

// One representative per simultaneous-conjugation class of transitive pairs
// realizing the datum (exactly three partitions required). alpha is pinned to
// the canonical representative of pi_1; beta candidates are generated cycle
// by cycle along the decreasing parts of pi_2, pruning a branch as soon as a
// completed cycle of the partial product alpha*beta cannot be matched against
// the parts of pi_3 still available. Candidates are identified under the
// centralizer of alpha. The result is sorted by class key and is independent
// of the worker count; jobs > 1 splits the search at the first choice points.
std::vector<ConstellationPair> enumerate_rigid_classes(const BranchDatum& datum, int jobs = 1);

// "alpha=(1 2 3)(4 5); beta=...; gamma=..." with 1-indexed cycles.
std::string to_string(const ConstellationPair& pair);

}  // namespace hurwitz
