#pragma once

#include <cstdint>

#include "hurwitz/datum.hpp"

namespace hurwitz {

struct OracleCounts {
  std::int64_t rigid = 0;
  std::int64_t flexible = 0;
  std::int64_t very_flexible = 0;

  bool operator==(const OracleCounts&) const = default;
};

// Exhaustive reference counter.  Enumerates every pair of permutations in
// S_d x S_d with raw image tables — no sharing with the production
// enumeration path — and computes the three counts by closing explicit
// union-find structures under all d! simultaneous conjugations plus the
// colour-swap / role-rotation / mirror edges.  Degree is capped at 6; the
// full pair scan is O((d!)^2).
OracleCounts brute_force_counts(const BranchDatum& datum);

}  // namespace hurwitz
