#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/union_find.hpp"

namespace hurwitz {

namespace {

constexpr int kOracleDegreeCap = 6;

// Permutations are packed 3 bits per image; with d <= 6 a code fits in 18
// bits, so direct-index tables stay small.
int pack_code(const int* im, int d) {
  int code = 0;
  for (int x = 0; x < d; ++x) code |= im[x] << (3 * x);
  return code;
}

// Cycle type as a packed multiset: 3 bits hold the multiplicity of each
// cycle length (at most 6 cycles of any one length when d <= 6).
int pack_type_of_images(const int* im, int d) {
  int counts[kOracleDegreeCap + 1] = {};
  bool seen[kOracleDegreeCap] = {};
  for (int x = 0; x < d; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = im[y]) {
      seen[y] = true;
      ++len;
    }
    ++counts[len];
  }
  int id = 0;
  for (int len = 1; len <= d; ++len) id |= counts[len] << (3 * (len - 1));
  return id;
}

int pack_type_of_partition(const Partition& pi) {
  int counts[kOracleDegreeCap + 1] = {};
  for (int part : pi.parts()) ++counts[part];
  int id = 0;
  for (int len = 1; len <= pi.total(); ++len) id |= counts[len] << (3 * (len - 1));
  return id;
}

bool images_transitive(const int* a, const int* b, int d) {
  int stack[kOracleDegreeCap];
  bool seen[kOracleDegreeCap] = {};
  int top = 0;
  stack[top++] = 0;
  seen[0] = true;
  int reached = 1;
  while (top > 0) {
    const int x = stack[--top];
    for (const int y : {a[x], b[x]}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack[top++] = y;
      }
    }
  }
  return reached == d;
}

}  // namespace

OracleCounts brute_force_counts(const BranchDatum& datum) {
  if (datum.partition_count() != 3)
    throw IncompatibleDatum("reference counter requires exactly three branching partitions");
  const int d = datum.degree();
  if (d > kOracleDegreeCap)
    throw IncompatibleDatum("reference counter supports degree at most 6");

  // All of S_d as raw image tables, indexed in lexicographic order.
  std::vector<int> flat;
  std::vector<int> cur(d);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::int32_t> index_of_code(std::size_t(1) << (3 * d), -1);
  int n = 0;
  do {
    flat.insert(flat.end(), cur.begin(), cur.end());
    index_of_code[pack_code(cur.data(), d)] = n++;
  } while (std::next_permutation(cur.begin(), cur.end()));
  const auto im = [&](int p) { return flat.data() + std::size_t(p) * d; };

  std::vector<std::int32_t> inv(n);
  std::vector<std::int32_t> type_of(n);
  std::vector<std::int32_t> compose_table(std::size_t(n) * n);  // [a*n+b] = a.b
  std::vector<std::int32_t> conj_table(std::size_t(n) * n);     // [g*n+p] = g.p.g^-1
  {
    int tmp[kOracleDegreeCap];
    for (int p = 0; p < n; ++p) {
      for (int x = 0; x < d; ++x) tmp[im(p)[x]] = x;
      inv[p] = index_of_code[pack_code(tmp, d)];
      type_of[p] = pack_type_of_images(im(p), d);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int x = 0; x < d; ++x) tmp[x] = im(a)[im(b)[x]];
        compose_table[std::size_t(a) * n + b] = index_of_code[pack_code(tmp, d)];
      }
    for (int g = 0; g < n; ++g)
      for (int p = 0; p < n; ++p) {
        for (int x = 0; x < d; ++x) tmp[im(g)[x]] = im(g)[im(p)[x]];
        conj_table[std::size_t(g) * n + p] = index_of_code[pack_code(tmp, d)];
      }
  }

  // The universe is every transitive pair whose type triple is a reordering
  // of the datum's triple; colour-swap and role-rotation land inside it.
  const auto& pis = datum.partitions();
  std::array<int, 3> datum_triple = {pack_type_of_partition(pis[0]),
                                     pack_type_of_partition(pis[1]),
                                     pack_type_of_partition(pis[2])};
  std::vector<std::array<int, 3>> triples;
  {
    std::array<int, 3> t = datum_triple;
    std::sort(t.begin(), t.end());
    do triples.push_back(t);
    while (std::next_permutation(t.begin(), t.end()));
  }
  const auto in_universe = [&](int ta, int tb, int tc) {
    for (const auto& t : triples)
      if (t[0] == ta && t[1] == tb && t[2] == tc) return true;
    return false;
  };

  std::vector<std::int32_t> pair_slot(std::size_t(n) * n, -1);
  std::vector<std::pair<std::int32_t, std::int32_t>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int c = compose_table[std::size_t(a) * n + b];
      if (!in_universe(type_of[a], type_of[b], type_of[c])) continue;
      if (!images_transitive(im(a), im(b), d)) continue;
      pair_slot[std::size_t(a) * n + b] = static_cast<std::int32_t>(slots.size());
      slots.emplace_back(a, b);
    }

  const auto slot_of = [&](int a, int b) {
    const std::int32_t s = pair_slot[std::size_t(a) * n + b];
    if (s < 0) throw InternalError("reference counter: a move image left the universe");
    return s;
  };

  const int s_count = static_cast<int>(slots.size());
  UnionFind uf_conj(s_count);
  UnionFind uf_flex(s_count);
  UnionFind uf_very(s_count);
  for (int s = 0; s < s_count; ++s) {
    const auto [a, b] = slots[s];
    for (int g = 0; g < n; ++g) {
      const int ga = conj_table[std::size_t(g) * n + a];
      const int gb = conj_table[std::size_t(g) * n + b];
      const int t = slot_of(ga, gb);
      uf_conj.unite(s, t);
      uf_flex.unite(s, t);
      uf_very.unite(s, t);
    }
    const int swapped = slot_of(b, conj_table[std::size_t(inv[b]) * n + a]);
    const int rotated = slot_of(b, inv[compose_table[std::size_t(a) * n + b]]);
    uf_flex.unite(s, swapped);
    uf_flex.unite(s, rotated);
    uf_very.unite(s, swapped);
    uf_very.unite(s, rotated);
    uf_very.unite(s, slot_of(inv[a], inv[b]));
  }

  // Count orbit representatives among the pairs realizing the datum's own
  // (ordered) triple.
  std::set<int> rigid_roots, flex_roots, very_roots;
  for (int s = 0; s < s_count; ++s) {
    const auto [a, b] = slots[s];
    const int c = compose_table[std::size_t(a) * n + b];
    if (type_of[a] != datum_triple[0] || type_of[b] != datum_triple[1] ||
        type_of[c] != datum_triple[2])
      continue;
    rigid_roots.insert(uf_conj.find(s));
    flex_roots.insert(uf_flex.find(s));
    very_roots.insert(uf_very.find(s));
  }
  return OracleCounts{static_cast<std::int64_t>(rigid_roots.size()),
                      static_cast<std::int64_t>(flex_roots.size()),
                      static_cast<std::int64_t>(very_roots.size())};
}

}  // namespace hurwitz
