#include "hurwitz/datum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

constexpr int kDegreeCap = 16;

bool all_ones(const Partition& p) { return p.parts().front() == 1; }

// Returns the derived cover genus, or nullopt with a reason on failure.
std::optional<int> derived_genus(int degree, const std::vector<Partition>& partitions,
                                 std::string& reason) {
  const int n = static_cast<int>(partitions.size());
  int length_sum = 0;
  for (const Partition& p : partitions) {
    if (p.total() != degree) {
      reason = "partition " + to_string(p) + " does not sum to the degree";
      return std::nullopt;
    }
    length_sum += p.length();
  }
  const int euler = length_sum - degree * (n - 2);  // 2 - 2g of the cover
  if (euler % 2 != 0) {
    reason = "derived cover Euler characteristic is odd";
    return std::nullopt;
  }
  const int genus = (2 - euler) / 2;
  if (genus < 0) {
    reason = "derived cover genus is negative";
    return std::nullopt;
  }
  return genus;
}

}  // namespace

BranchDatum check_compatibility(int degree, std::vector<Partition> partitions,
                                std::optional<int> expected_genus) {
  if (degree < 2) throw IncompatibleDatum("degree must be at least 2");
  if (degree > kDegreeCap) throw IncompatibleDatum("degree above the supported envelope (16)");
  if (partitions.empty()) throw IncompatibleDatum("at least one branching partition is required");
  std::string reason;
  const auto genus = derived_genus(degree, partitions, reason);
  if (!genus) throw IncompatibleDatum(reason);
  if (expected_genus && *expected_genus != *genus)
    throw IncompatibleDatum("supplied cover genus does not match the derived value");
  const bool degenerate = std::any_of(partitions.begin(), partitions.end(), all_ones);
  return BranchDatum(degree, std::move(partitions), *genus, degenerate);
}

std::vector<Partition> partitions_of(int total) {
  if (total < 1) throw std::invalid_argument("partitions_of: total must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  // first part largest and weakly decreasing thereafter: decreasing lex order
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

std::vector<BranchDatum> enumerate_compatible_data(int degree) {
  if (degree < 2) throw std::invalid_argument("enumerate_compatible_data: degree must be >= 2");
  if (degree > kDegreeCap)
    throw std::invalid_argument("enumerate_compatible_data: degree above the supported envelope (16)");
  std::vector<Partition> usable;
  for (Partition& p : partitions_of(degree))
    if (!all_ones(p)) usable.push_back(std::move(p));
  // usable is in decreasing lex order, so index order i <= j <= k emits each
  // unordered triple once with pi_1 >= pi_2 >= pi_3
  std::vector<BranchDatum> out;
  std::string reason;
  for (std::size_t i = 0; i < usable.size(); ++i)
    for (std::size_t j = i; j < usable.size(); ++j)
      for (std::size_t k = j; k < usable.size(); ++k) {
        std::vector<Partition> triple{usable[i], usable[j], usable[k]};
        if (derived_genus(degree, triple, reason))
          out.push_back(check_compatibility(degree, std::move(triple)));
      }
  return out;
}

std::string to_string(const BranchDatum& datum) {
  std::ostringstream os;
  os << datum.degree();
  for (const Partition& p : datum.partitions()) os << "; " << to_string(p);
  return os.str();
}

BranchDatum parse_datum(const std::string& text) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() < 2) throw ParseError("datum: expected \"degree; partition; ...\"");

  const auto trim = [](const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
  };

  const std::string deg_text = trim(fields[0]);
  if (deg_text.empty() ||
      !std::all_of(deg_text.begin(), deg_text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("datum: degree must be a positive integer");
  if (deg_text.size() > 4) throw ParseError("datum: degree out of range");
  const int degree = std::stoi(deg_text);

  std::vector<Partition> partitions;
  for (std::size_t i = 1; i < fields.size(); ++i) partitions.push_back(parse_partition(fields[i]));
  return check_compatibility(degree, std::move(partitions));
}

}  // namespace hurwitz
