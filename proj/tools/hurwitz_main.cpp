#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/datum.hpp"
#include "hurwitz/dessin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/report.hpp"

namespace {

constexpr const char* kDatumHelp = "Branch datum \"d; pi1; pi2; pi3\", e.g. \"7; 3,2,1,1; 3,2,1,1; 7\"";

void run_check(const std::string& datum_text) {
  const hurwitz::BranchDatum datum = hurwitz::parse_datum(datum_text);
  std::cout << "compatible: yes\n";
  std::cout << "datum: " << hurwitz::to_string(datum) << "\n";
  std::cout << "degree: " << datum.degree() << "\n";
  std::cout << "cover genus: " << datum.cover_genus() << "\n";
  std::cout << "degenerate: " << (datum.degenerate() ? "yes" : "no") << "\n";
}

void run_count(const std::string& datum_text, const std::string& format, int jobs) {
  const hurwitz::BranchDatum datum = hurwitz::parse_datum(datum_text);
  const hurwitz::DatumAnalysis analysis = hurwitz::analyze_datum(datum, jobs);
  if (format == "json")
    std::cout << hurwitz::format_report_json(analysis);
  else
    std::cout << hurwitz::format_report_table(datum, analysis.report);
}

void run_classes(const std::string& datum_text, int jobs) {
  const hurwitz::BranchDatum datum = hurwitz::parse_datum(datum_text);
  const hurwitz::DatumAnalysis analysis = hurwitz::analyze_datum(datum, jobs);
  std::cout << "datum: " << hurwitz::to_string(datum) << "\n";
  std::cout << "rigid classes: " << analysis.report.rigid << "\n";
  std::cout << "flexible orbits: " << analysis.report.flexible << "\n";
  std::cout << "very flexible orbits: " << analysis.report.very_flexible << "\n";
  for (std::size_t i = 0; i < analysis.classes.size(); ++i)
    std::cout << "class " << i << " (flexible orbit " << analysis.flexible_orbits.orbit_of[i]
              << ", very flexible orbit " << analysis.very_flexible_orbits.orbit_of[i]
              << "): " << hurwitz::to_string(analysis.classes[i]) << "\n";
}

void run_dessins(const std::string& datum_text, const std::string& out_dir,
                 const std::string& format, int jobs) {
  const hurwitz::BranchDatum datum = hurwitz::parse_datum(datum_text);
  const std::vector<hurwitz::ConstellationPair> classes =
      hurwitz::enumerate_rigid_classes(datum, jobs);
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const hurwitz::CombinatorialMap map = hurwitz::to_map(classes[i], datum);
    const std::string name =
        "class_" + std::to_string(i) + (format == "json" ? ".json" : ".dot");
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << (format == "json" ? hurwitz::emit_json(map) : hurwitz::emit_dot(map));
    if (!file.good()) throw std::runtime_error("failed writing " + path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  std::cout << classes.size() << " classes written\n";
}

void run_oracle(const std::string& datum_text) {
  const hurwitz::BranchDatum datum = hurwitz::parse_datum(datum_text);
  const hurwitz::OracleCounts counts = hurwitz::brute_force_counts(datum);
  std::cout << "datum: " << hurwitz::to_string(datum) << "\n";
  std::cout << "rigid: " << counts.rigid << "\n";
  std::cout << "flexible: " << counts.flexible << "\n";
  std::cout << "very flexible: " << counts.very_flexible << "\n";
}

void run_scan(int degree, int jobs) {
  const std::vector<hurwitz::ScanEntry> entries = hurwitz::scan_degree(degree, jobs);
  std::cout << hurwitz::format_scan(degree, entries);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and count branched covers of the sphere with three branching points"};
  app.require_subcommand(1);

  std::string datum_text;
  std::string count_format = "table";
  std::string dessin_format = "dot";
  std::string out_dir;
  int jobs = 1;
  int degree = 0;

  CLI::App* check = app.add_subcommand("check", "Validate a branch datum and report its cover genus");
  check->add_option("datum", datum_text, kDatumHelp)->required();

  CLI::App* count = app.add_subcommand("count", "Compute the rigid/flexible/very-flexible counts");
  count->add_option("datum", datum_text, kDatumHelp)->required();
  count->add_option("--format", count_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  count->add_option("--jobs", jobs, "Enumeration worker threads")->check(CLI::Range(1, 64));

  CLI::App* classes = app.add_subcommand("classes", "List the rigid class representatives");
  classes->add_option("datum", datum_text, kDatumHelp)->required();
  classes->add_option("--jobs", jobs, "Enumeration worker threads")->check(CLI::Range(1, 64));

  CLI::App* dessins = app.add_subcommand("dessins", "Write one embedded-graph file per rigid class");
  dessins->add_option("datum", datum_text, kDatumHelp)->required();
  dessins->add_option("--out", out_dir, "Output directory")->required();
  dessins->add_option("--format", dessin_format, "File format")
      ->check(CLI::IsMember({"dot", "json"}));
  dessins->add_option("--jobs", jobs, "Enumeration worker threads")->check(CLI::Range(1, 64));

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force reference counts (degree <= 6)");
  oracle->add_option("datum", datum_text, kDatumHelp)->required();

  CLI::App* scan = app.add_subcommand("scan", "Count every compatible datum of a degree");
  scan->add_option("--degree", degree, "Cover degree")->required()->check(CLI::Range(2, 16));
  scan->add_option("--jobs", jobs, "Worker threads across data")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
    if (*check) run_check(datum_text);
    if (*count) run_count(datum_text, count_format, jobs);
    if (*classes) run_classes(datum_text, jobs);
    if (*dessins) run_dessins(datum_text, out_dir, dessin_format, jobs);
    if (*oracle) run_oracle(datum_text);
    if (*scan) run_scan(degree, jobs);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const hurwitz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hurwitz::IncompatibleDatum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
