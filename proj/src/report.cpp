#include "hurwitz/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<std::pair<std::string, std::int64_t>> twelve_table(std::int64_t rigid,
                                                               std::int64_t flexible,
                                                               std::int64_t very_flexible) {
  if (very_flexible < 0 || flexible < very_flexible || rigid < flexible)
    throw InternalError("count table: rigid >= flexible >= very_flexible >= 0 violated");
  if ((rigid == 0) != (very_flexible == 0))
    throw InternalError("count table: the three counts must vanish simultaneously");
  return {
      {"R", very_flexible},     {"R_+", very_flexible},  {"R_*", very_flexible},
      {"R_*+", very_flexible},  {"R^+", 2 * flexible},   {"R_+^+", flexible},
      {"R_*^+", 2 * flexible},  {"R_*+^+", flexible},    {"R_*^*", rigid},
      {"R_*+^*", rigid},        {"R_*^*+", 2 * rigid},   {"R_*+^*+", rigid},
  };
}

DatumAnalysis analyze_datum(const BranchDatum& datum, int jobs) {
  std::vector<ConstellationPair> classes = enumerate_rigid_classes(datum, jobs);
  OrbitPartition flexible = count_flexible(classes, datum);
  OrbitPartition very_flexible = count_very_flexible(classes, datum);
  CountReport report;
  report.rigid = static_cast<std::int64_t>(classes.size());
  report.flexible = flexible.orbit_count;
  report.very_flexible = very_flexible.orbit_count;
  report.table = twelve_table(report.rigid, report.flexible, report.very_flexible);
  report.genus = datum.cover_genus();
  report.degenerate = datum.degenerate();
  return DatumAnalysis{datum, std::move(classes), std::move(flexible), std::move(very_flexible),
                       std::move(report)};
}

std::string format_report_table(const BranchDatum& datum, const CountReport& report) {
  std::ostringstream os;
  os << "datum: " << to_string(datum) << "\n";
  os << "degree: " << datum.degree() << "\n";
  os << "cover genus: " << report.genus << "\n";
  os << "degenerate: " << (report.degenerate ? "yes" : "no") << "\n";
  os << "rigid: " << report.rigid << "\n";
  os << "flexible: " << report.flexible << "\n";
  os << "very flexible: " << report.very_flexible << "\n";
  os << "\n";
  os << std::left << std::setw(9) << "label" << std::right << std::setw(6) << "count" << "\n";
  for (const auto& [label, value] : report.table)
    os << std::left << std::setw(9) << label << std::right << std::setw(6) << value << "\n";
  os << "\n";
  os << "legend: subscript * counts marked covers (branching points pinned),\n";
  os << "        subscript + counts orientation-preserving covers;\n";
  os << "        superscript * fixes the base sphere under the identification,\n";
  os << "        superscript + makes the identifying homeomorphisms positive.\n";
  os << "        rigid = R_*+^*+, flexible = R_+^+, very flexible = R.\n";
  return os.str();
}

namespace {

nlohmann::json orbit_map_json(const OrbitPartition& orbits) {
  nlohmann::json map = nlohmann::json::object();
  for (std::size_t i = 0; i < orbits.orbit_of.size(); ++i)
    map[std::to_string(i)] = orbits.orbit_of[i];
  return map;
}

}  // namespace

std::string format_report_json(const DatumAnalysis& analysis) {
  const BranchDatum& datum = analysis.datum;
  const CountReport& report = analysis.report;
  nlohmann::json j;
  j["datum"] = to_string(datum);
  j["degree"] = datum.degree();
  std::vector<std::vector<int>> parts;
  for (const Partition& pi : datum.partitions()) parts.push_back(pi.parts());
  j["partitions"] = parts;
  j["genus"] = report.genus;
  j["degenerate"] = report.degenerate;
  j["counts"] = {{"rigid", report.rigid},
                 {"flexible", report.flexible},
                 {"very_flexible", report.very_flexible}};
  nlohmann::json table;
  for (const auto& [label, value] : report.table) table[label] = value;
  j["table"] = table;
  j["flexible_orbits"] = orbit_map_json(analysis.flexible_orbits);
  j["very_flexible_orbits"] = orbit_map_json(analysis.very_flexible_orbits);
  return j.dump(2) + "\n";
}

std::vector<ScanEntry> scan_degree(int degree, int jobs) {
  const std::vector<BranchDatum> data = enumerate_compatible_data(degree);
  std::vector<ScanEntry> entries;
  entries.reserve(data.size());
  for (const BranchDatum& datum : data) entries.push_back(ScanEntry{datum, CountReport{}, false});

  jobs = std::clamp(jobs, 1, 64);
  const int workers = std::min<int>(jobs, std::max<std::size_t>(data.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < data.size(); i = next.fetch_add(1)) {
          DatumAnalysis analysis = analyze_datum(data[i], 1);
          entries[i].report = std::move(analysis.report);
          entries[i].exceptional = entries[i].report.rigid == 0;
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return entries;
}

std::string format_scan(int degree, const std::vector<ScanEntry>& entries) {
  std::ostringstream os;
  os << "degree " << degree << ": " << entries.size() << " compatible data\n";
  std::int64_t exceptional = 0;
  const auto line = [&os](const ScanEntry& entry) {
    os << (entry.exceptional ? "exceptional: " : "realizable:  ") << to_string(entry.datum)
       << "  rigid=" << entry.report.rigid << " flexible=" << entry.report.flexible
       << " very_flexible=" << entry.report.very_flexible << "\n";
  };
  for (const ScanEntry& entry : entries)
    if (entry.exceptional) {
      ++exceptional;
      line(entry);
    }
  for (const ScanEntry& entry : entries)
    if (!entry.exceptional) line(entry);
  os << "exceptional: " << exceptional << " / total: " << entries.size() << "\n";
  return os.str();
}

}  // namespace hurwitz
