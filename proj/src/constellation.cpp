#include "hurwitz/constellation.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

bool transitive_images(const std::vector<int>& a, const std::vector<int>& b) {
  const int d = static_cast<int>(a.size());
  std::vector<char> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int y : {a[x], b[x]}) {
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == d;
}

// Backtracking generator for the beta candidates of a datum: beta is built
// cycle by cycle along the weakly decreasing parts of pi_2, each cycle rooted
// at its minimum element, equal-length cycles rooted in increasing order so
// every beta is produced exactly once. While beta grows, the partial product
// delta = alpha*beta is tracked as a set of directed paths; a branch dies as
// soon as a delta cycle closes with a length not available in pi_3, or a
// delta path already needs more points than the longest still-available part.
struct BetaSearch {
  int d;
  std::vector<int> alpha;
  std::vector<int> parts;
  std::vector<int> need;        // per length: parts of pi_3 not yet consumed
  int needed_max;               // largest length with need > 0
  std::vector<int> beta;
  std::vector<char> used;
  std::vector<int> path_head;   // valid where the point is currently a path tail
  std::vector<int> path_tail;   // valid where the point is currently a path head
  std::vector<int> path_edges;  // valid at path heads
  std::vector<int> start_of;    // chosen root per part

  // deterministic task split: the first one or two choices of the first cycle
  // define a branch id; worker w explores ids congruent to w modulo jobs
  int jobs = 1;
  int worker = 0;
  long branch_counter = 0;

  std::vector<std::vector<int>> found;

  BetaSearch(const Permutation& a, const Partition& pi2, const Partition& pi3)
      : d(a.degree()),
        alpha(a.images()),
        parts(pi2.parts()),
        need(d + 1, 0),
        needed_max(pi3.parts().front()),
        beta(d, -1),
        used(d, 0),
        path_head(d),
        path_tail(d),
        path_edges(d, 0),
        start_of(parts.size(), 0) {
    for (int len : pi3.parts()) ++need[len];
    for (int x = 0; x < d; ++x) path_head[x] = path_tail[x] = x;
  }

  struct Undo {
    bool closed = false;
    int x1 = 0, x2 = 0, x3 = 0, x4 = 0, x5 = 0;
  };

  // One delta edge u -> w appears per beta assignment. Returns false (and
  // changes nothing) when the edge is inconsistent with the remaining pi_3.
  bool add_edge(int u, int w, Undo& undo) {
    const int h1 = path_head[u];
    if (h1 == w) {  // a delta cycle closes; its length must still be needed
      const int len = path_edges[w] + 1;
      if (len > needed_max || need[len] == 0) return false;
      undo.closed = true;
      undo.x1 = len;
      undo.x2 = needed_max;
      if (--need[len] == 0 && len == needed_max) {
        int m = needed_max;
        while (m > 0 && need[m] == 0) --m;
        needed_max = m;
      }
      return true;
    }
    const int t2 = path_tail[w];
    const int edges = path_edges[h1] + 1 + path_edges[w];
    if (edges + 1 > needed_max) return false;  // the merged path cannot fit any remaining part
    undo.closed = false;
    undo.x1 = h1;
    undo.x2 = t2;
    undo.x3 = path_tail[h1];
    undo.x4 = path_edges[h1];
    undo.x5 = path_head[t2];
    path_tail[h1] = t2;
    path_edges[h1] = edges;
    path_head[t2] = h1;
    return true;
  }

  void remove_edge(const Undo& undo) {
    if (undo.closed) {
      ++need[undo.x1];
      needed_max = std::max(needed_max, undo.x2);
    } else {
      path_tail[undo.x1] = undo.x3;
      path_edges[undo.x1] = undo.x4;
      path_head[undo.x2] = undo.x5;
    }
  }

  bool claim_branch() { return (branch_counter++ % jobs) == worker; }

  void run() { rec_part(0); }

  void rec_part(std::size_t pi) {
    if (pi == parts.size()) {
      if (transitive_images(alpha, beta)) found.push_back(beta);
      return;
    }
    const int L = parts[pi];
    int min_start = 0;
    if (pi > 0 && parts[pi - 1] == L) min_start = start_of[pi - 1] + 1;
    int mu = 0;
    while (mu < d && used[mu]) ++mu;  // smallest unplaced point
    // a skipped smaller point can only be the root of some later, shorter
    // cycle; when no shorter part remains the root must be mu itself
    const bool no_shorter_part_left = parts.back() == L;
    for (int s = min_start; s < d; ++s) {
      if (used[s]) continue;
      if (s != mu && no_shorter_part_left) continue;
      start_of[pi] = s;
      used[s] = 1;
      rec_cycle(pi, s, s, 1);
      used[s] = 0;
    }
  }

  void rec_cycle(std::size_t pi, int s, int prev, int count) {
    const int L = parts[pi];
    if (count == L) {
      Undo undo;
      if (add_edge(prev, alpha[s], undo)) {
        beta[prev] = s;
        const bool capture = pi == 0 && L == 1;
        if (!capture || claim_branch()) rec_part(pi + 1);
        beta[prev] = -1;
        remove_edge(undo);
      }
      return;
    }
    for (int x = s + 1; x < d; ++x) {  // all non-root elements exceed the root
      if (used[x]) continue;
      Undo undo;
      if (!add_edge(prev, alpha[x], undo)) continue;
      beta[prev] = x;
      used[x] = 1;
      const bool capture = pi == 0 && count == 1;
      if (!capture || claim_branch()) rec_cycle(pi, s, x, count + 1);
      used[x] = 0;
      beta[prev] = -1;
      remove_edge(undo);
    }
  }
};

std::vector<std::vector<int>> search_betas(const Permutation& alpha, const Partition& pi2,
                                           const Partition& pi3, int jobs) {
  jobs = std::clamp(jobs, 1, 64);
  if (jobs == 1) {
    BetaSearch s(alpha, pi2, pi3);
    s.run();
    return std::move(s.found);
  }
  std::vector<std::vector<std::vector<int>>> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        BetaSearch s(alpha, pi2, pi3);
        s.jobs = jobs;
        s.worker = w;
        s.run();
        results[w] = std::move(s.found);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<std::vector<int>> all;
  for (auto& r : results)
    for (auto& b : r) all.push_back(std::move(b));
  return all;
}

}  // namespace

ConstellationPair::ConstellationPair(Permutation alpha, Permutation beta)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(inverse(compose(alpha_, beta_))) {}

bool is_transitive(const ConstellationPair& pair) {
  return transitive_images(pair.alpha().images(), pair.beta().images());
}

RigidClassKey class_key(const ConstellationPair& pair) {
  const Permutation g = conjugator_to_canonical(pair.alpha());
  const Permutation a0 = conjugate(pair.alpha(), g);
  const Permutation b0 = conjugate(pair.beta(), g);
  const int d = pair.degree();
  const auto& bi = b0.images();
  std::vector<int> best = bi;
  std::vector<int> cand(d);
  for (const Permutation& z : centralizer(a0)) {
    const auto& zi = z.images();
    for (int x = 0; x < d; ++x) cand[zi[x]] = zi[bi[x]];
    if (cand < best) best = cand;
  }
  std::string bytes;
  bytes.reserve(1 + 2 * static_cast<std::size_t>(d));
  bytes.push_back(static_cast<char>(d));
  for (int x : a0.images()) bytes.push_back(static_cast<char>(x));
  for (int x : best) bytes.push_back(static_cast<char>(x));
  return RigidClassKey{std::move(bytes)};
}

std::vector<ConstellationPair> enumerate_rigid_classes(const BranchDatum& datum, int jobs) {
  if (datum.partition_count() != 3)
    throw IncompatibleDatum("class enumeration requires exactly three branching partitions");
  const auto& pis = datum.partitions();
  const int d = datum.degree();
  const Permutation alpha = canonical_class_rep(pis[0]);
  const auto betas = search_betas(alpha, pis[1], pis[2], jobs);

  // one representative per centralizer orbit: the least conjugate of beta
  const CentralizerRange zrange = centralizer(alpha);
  std::set<std::vector<int>> minima;
  std::vector<int> cand(d);
  for (const auto& b : betas) {
    std::vector<int> best = b;
    for (const Permutation& z : zrange) {
      const auto& zi = z.images();
      for (int x = 0; x < d; ++x) cand[zi[x]] = zi[b[x]];
      if (cand < best) best = cand;
    }
    minima.insert(std::move(best));
  }

  // set order on beta equals class-key order: the serialized key is the
  // fixed alpha followed by the minimized beta
  std::vector<ConstellationPair> out;
  out.reserve(minima.size());
  for (const auto& b : minima) {
    ConstellationPair pair(alpha, Permutation(b));
    if (cycle_type(pair.alpha()) != pis[0] || cycle_type(pair.beta()) != pis[1] ||
        cycle_type(pair.gamma()) != pis[2])
      throw InternalError("enumerated representative has wrong cycle types");
    if (!is_transitive(pair))
      throw InternalError("enumerated representative is not transitive");
    if (!(compose(pair.alpha(), compose(pair.beta(), pair.gamma())) == Permutation::identity(d)))
      throw InternalError("enumerated representative violates the product identity");
    out.push_back(std::move(pair));
  }
  return out;
}

std::string to_string(const ConstellationPair& pair) {
  return "alpha=" + to_cycle_string(pair.alpha()) + "; beta=" + to_cycle_string(pair.beta()) +
         "; gamma=" + to_cycle_string(pair.gamma());
}

}  // namespace hurwitz
