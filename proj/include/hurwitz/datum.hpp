#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

// A branch datum over the sphere: a degree d and branching partitions
// pi_1,...,pi_n of d, one per branching point. The cover surface is closed,
// connected and orientable; its genus is derived, never stored by callers:
//   2 - 2g = sum(length(pi_j)) - d(n - 2).
// A datum whose sums match but whose derived Euler characteristic is odd or
// whose genus is negative is incompatible. Instances only exist through
// check_compatibility, so holding a BranchDatum certifies compatibility.

enum class BaseSurface { Sphere };  // tag kept on the type so a positive-genus base stays additive

class BranchDatum {
public:
  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  int partition_count() const { return static_cast<int>(partitions_.size()); }
  int cover_genus() const { return cover_genus_; }
  // True when some partition is all ones, i.e. a branching point with no
  // actual branching. Such data are accepted but flagged; scans skip them.
  bool degenerate() const { return degenerate_; }
  BaseSurface base() const { return BaseSurface::Sphere; }

  friend bool operator==(const BranchDatum&, const BranchDatum&) = default;

private:
  BranchDatum(int degree, std::vector<Partition> partitions, int cover_genus, bool degenerate)
      : degree_(degree),
        partitions_(std::move(partitions)),
        cover_genus_(cover_genus),
        degenerate_(degenerate) {}
  friend BranchDatum check_compatibility(int, std::vector<Partition>, std::optional<int>);

  int degree_;
  std::vector<Partition> partitions_;
  int cover_genus_;
  bool degenerate_;
};

// Validates partition sums and the derived genus; throws IncompatibleDatum
// with the failing rule otherwise. The supported degree envelope is 2..16.
// When expected_genus is supplied it is checked against the derived value.
BranchDatum check_compatibility(int degree, std::vector<Partition> partitions,
                                std::optional<int> expected_genus = std::nullopt);

// All compatible three-partition data of the given degree, over every cover
// genus the constraints allow. All-ones partitions are excluded, and data
// equal up to reordering the triple appear once, ordered so that
// pi_1 >= pi_2 >= pi_3 lexicographically. The list order is deterministic.
std::vector<BranchDatum> enumerate_compatible_data(int degree);

// All partitions of total, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int total);

// Datum text: "d; pi_1; ...; pi_n", e.g. "7; 3,2,1,1; 3,2,1,1; 7".
std::string to_string(const BranchDatum& datum);
BranchDatum parse_datum(const std::string& text);

}  // namespace hurwitz
