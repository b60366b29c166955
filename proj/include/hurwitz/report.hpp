#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/constellation.hpp"
#include "hurwitz/datum.hpp"
#include "hurwitz/moves.hpp"

namespace hurwitz {

struct CountReport {
  std::int64_t rigid = 0;          // covers up to marked orientation-preserving equivalence
  std::int64_t flexible = 0;       // covers up to orientation-preserving equivalence
  std::int64_t very_flexible = 0;  // covers up to all homeomorphisms
  std::vector<std::pair<std::string, std::int64_t>> table;  // all twelve flavours
  int genus = 0;
  bool degenerate = false;
};

// The twelve equivalence flavours collapse onto the three fundamental counts:
//   R = R_+ = R_* = R_*+              = very_flexible
//   R_+^+ = R_*+^+                    = flexible,   R^+ = R_*^+ = 2*flexible
//   R_*^* = R_*+^* = R_*+^*+          = rigid,      R_*^*+     = 2*rigid
// Returned in display order R, R_+, R_*, R_*+, R^+, R_+^+, R_*^+, R_*+^+,
// R_*^*, R_*+^*, R_*^*+, R_*+^*+.  Violated preconditions (the counts must
// satisfy rigid >= flexible >= very_flexible >= 0 and vanish simultaneously)
// signal an upstream bug.
std::vector<std::pair<std::string, std::int64_t>> twelve_table(std::int64_t rigid,
                                                               std::int64_t flexible,
                                                               std::int64_t very_flexible);

struct DatumAnalysis {
  BranchDatum datum;
  std::vector<ConstellationPair> classes;  // rigid representatives in class-key order
  OrbitPartition flexible_orbits;
  OrbitPartition very_flexible_orbits;
  CountReport report;
};

// Full pipeline: enumerate rigid classes, fold them under the move actions,
// assemble the report.  `jobs` controls enumeration workers; results are
// independent of the worker count.
DatumAnalysis analyze_datum(const BranchDatum& datum, int jobs = 1);

// Column-aligned text rendering with a legend for the twelve ASCII labels.
std::string format_report_table(const BranchDatum& datum, const CountReport& report);

// Key-sorted JSON rendering (datum, degree, partitions, genus, degenerate,
// counts, table, and the two class-index -> orbit-id maps).
std::string format_report_json(const DatumAnalysis& analysis);

struct ScanEntry {
  BranchDatum datum;
  CountReport report;
  bool exceptional = false;  // compatible but realized by no cover
};

// Analyzes every compatible three-point datum of the given degree, in
// canonical enumeration order.  Entries may be processed in parallel; the
// returned order is canonical regardless of completion order.
std::vector<ScanEntry> scan_degree(int degree, int jobs = 1);

// Exceptional data first, then the realizable ones, then a summary line
// "exceptional: k / total: m".
std::string format_scan(int degree, const std::vector<ScanEntry>& entries);

}  // namespace hurwitz
