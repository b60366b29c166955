#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

// Exact permutation arithmetic on {0,...,d-1}: composition, cycle structure,
// conjugacy class representatives, centralizers. Points are 0-indexed
// internally; cycle notation at the text boundary is 1-indexed with fixed
// points omitted. The composition convention, fixed repo-wide, is
// compose(p, q)(x) = p(q(x)): the right factor is applied first.

// A permutation stored as its image table. Immutable after construction.
class Permutation {
public:
  // Validates that images is a bijection of {0,...,d-1}, d >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }  // unchecked
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// A partition of a positive integer: weakly decreasing positive parts.
// Any input order is accepted and normalized on construction.
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  // Lexicographic order on the normalized part sequences.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int total_;
};

// compose(p, q)(x) = p(q(x)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// conjugate(p, g) = g p g^-1. Degrees must match.
Permutation conjugate(const Permutation& p, const Permutation& g);

// All cycles of p, fixed points included. Each cycle starts at its minimum
// element; cycles are listed by increasing minimum.
std::vector<std::vector<int>> cycles_of(const Permutation& p);

// Cycle lengths of p, fixed points included as parts equal to 1.
Partition cycle_type(const Permutation& p);

// The fixed representative of the conjugacy class with the given cycle type:
// cycles fill {0,...,d-1} consecutively along the decreasing parts, e.g.
// [3,2,1,1] -> (0 1 2)(3 4)(5)(6).
Permutation canonical_class_rep(const Partition& type);

// A permutation g with conjugate(p, g) == canonical_class_rep(cycle_type(p)).
// Cycles of p are aligned onto the canonical blocks in order of decreasing
// length, ties broken by increasing minimum element; each cycle is matched
// starting from its minimum. For a canonical representative this yields the
// identity.
Permutation conjugator_to_canonical(const Permutation& p);

// Centralizer of a canonical class representative, generated structurally
// from the cycle data (rotations within cycles, then permutations of blocks
// of equal length) rather than by filtering the symmetric group. The range
// yields elements one at a time so callers never hold the whole list.
class CentralizerRange {
public:
  // Requires p == canonical_class_rep(cycle_type(p)).
  explicit CentralizerRange(const Permutation& p);

  std::uint64_t size() const;

  class iterator {
  public:
    using value_type = Permutation;
    using reference = const Permutation&;

    reference operator*() const { return current_; }
    iterator& operator++();

    // Input-iterator comparison: iterators agree exactly when both are
    // exhausted, which is all a begin()..end() scan needs.
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

  private:
    friend class CentralizerRange;
    iterator() : done_(true), current_(Permutation::identity(1)) {}
    explicit iterator(const CentralizerRange* owner);
    void rebuild();

    const CentralizerRange* owner_ = nullptr;
    std::vector<int> rotation_;                  // per cycle, in [0, length)
    std::vector<std::vector<int>> arrangement_;  // per length class: target cycle ids
    bool done_;
    Permutation current_;
  };

  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

private:
  friend class iterator;
  int degree_;
  std::vector<int> offset_;                     // start of each canonical block
  std::vector<int> length_;                     // block lengths, weakly decreasing
  std::vector<std::vector<int>> length_class_;  // cycle ids grouped by equal length
};

CentralizerRange centralizer(const Permutation& canonical_rep);

// Materialized centralizer, in the range's deterministic order.
std::vector<Permutation> centralizer_elements(const Permutation& canonical_rep);

// prod over distinct lengths L of L^k * k!, where k is the multiplicity of L.
std::uint64_t centralizer_order(const Partition& type);

// Text boundary. Cycle strings are 1-indexed with fixed points omitted;
// the identity prints as "()". Partitions print as comma-separated parts.
std::string to_cycle_string(const Permutation& p);
Permutation parse_cycle_string(const std::string& text, int degree);
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace hurwitz
