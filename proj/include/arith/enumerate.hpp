#pragma once

#include "arith/bigint.hpp"
#include "arith/chains.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/structure.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace arith {

struct EnumerationResult {
  std::string graph;  // descriptor, e.g. "ct:3,3"
  std::uint64_t bound = 0;
  std::vector<ArithStructure> structures;  // sorted by r, pairwise distinct
  std::optional<bool> stable;              // unchanged count at 2 * bound; empty when not checked

  std::size_t count() const noexcept { return structures.size(); }
};

struct EnumerateOptions {
  unsigned jobs = 1;
  bool check_stability = true;
};

namespace detail {

using Labels = std::vector<std::uint64_t>;

inline constexpr std::uint64_t max_search_bound = std::uint64_t{1} << 32;

inline void check_bound(std::uint64_t bound) {
  if (bound == 0) throw DomainError("search bound must be at least 1");
  if (bound > max_search_bound) throw DomainError("search bound exceeds 2^32");
}

/// Depth-first assignment in vertex-index order. A vertex is checked for divisibility
/// at the step where it and all its neighbours have values; when a checked vertex is
/// already assigned, the new value is stepped through its residue class directly.
class StructureSearch {
 public:
  StructureSearch(const Graph& g, std::uint64_t max_r) : g_(g), max_r_(max_r), n_(g.vertex_count()) {
    check_bound(max_r);
    checks_at_.resize(n_);
    for (std::size_t w = 0; w < n_; ++w) {
      std::size_t done = w;
      for (auto u : g.neighbors(w)) done = std::max(done, u);
      checks_at_[done].push_back(w);
    }
  }

  /// Calls visit(std::span<const uint64_t>) for every primitive solution; optionally fixes r_0.
  template <typename Visitor>
  void run(Visitor&& visit, std::optional<std::uint64_t> first = std::nullopt) {
    Labels r(n_, 0);
    descend(r, 0, 0, visit, first);
  }

 private:
  std::uint64_t neighbor_sum_without(const Labels& r, std::size_t w, std::size_t skip) const {
    std::uint64_t sum = 0;
    for (auto u : g_.neighbors(w))
      if (u != skip) sum += r[u];
    return sum;
  }

  bool passes(const Labels& r, std::size_t t) const {
    for (auto w : checks_at_[t])
      if (neighbor_sum_without(r, w, n_) % r[w] != 0) return false;
    return true;
  }

  template <typename Visitor>
  void descend(Labels& r, std::size_t t, std::uint64_t g, Visitor& visit, std::optional<std::uint64_t> first) {
    if (t == n_) {
      if (g == 1) visit(std::span<const std::uint64_t>(r));
      return;
    }
    auto attempt = [&](std::uint64_t value) {
      r[t] = value;
      if (passes(r, t)) descend(r, t + 1, std::gcd(g, value), visit, std::nullopt);
    };

    if (t == 0 && first) {
      if (*first >= 1 && *first <= max_r_) attempt(*first);
      r[t] = 0;
      return;
    }

    const auto& checks = checks_at_[t];
    const bool self_closed = std::find(checks.begin(), checks.end(), t) != checks.end();
    if (self_closed) {
      // All neighbours of t are set: r_t must divide their sum.
      const std::uint64_t sum = neighbor_sum_without(r, t, n_);
      const std::uint64_t top = std::min(max_r_, sum);
      std::vector<std::uint64_t> divisors;
      for (std::uint64_t i = 1; i * i <= sum && i <= top; ++i) {
        if (sum % i != 0) continue;
        divisors.push_back(i);
        if (sum / i != i && sum / i <= top) divisors.push_back(sum / i);
      }
      std::sort(divisors.begin(), divisors.end());
      for (auto v : divisors) attempt(v);
    } else if (!checks.empty()) {
      // t is the last unset neighbour of an assigned vertex w.
      const std::size_t w = checks.front();
      const std::uint64_t modulus = r[w];
      const std::uint64_t residue = neg_mod(neighbor_sum_without(r, w, t), modulus);
      for (std::uint64_t v = residue == 0 ? modulus : residue; v <= max_r_; v += modulus) attempt(v);
    } else {
      for (std::uint64_t v = 1; v <= max_r_; ++v) attempt(v);
    }
    r[t] = 0;
  }

  const Graph& g_;
  std::uint64_t max_r_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> checks_at_;
};

/// Runs the search with the first vertex's values shared out among workers.
template <typename PerWorker, typename Merge>
void parallel_by_first_value(const Graph& g, std::uint64_t max_r, unsigned jobs, PerWorker&& make_visitor,
                             Merge&& merge) {
  jobs = std::max(1u, jobs);
  std::atomic<std::uint64_t> next{1};
  auto work = [&](unsigned worker) {
    StructureSearch search(g, max_r);
    auto visitor = make_visitor(worker);
    for (std::uint64_t v = next++; v <= max_r; v = next++) search.run(visitor, v);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  merge();
}

inline std::vector<Labels> collect_labels(const Graph& g, std::uint64_t max_r, unsigned jobs) {
  jobs = std::max(1u, jobs);
  std::vector<std::vector<Labels>> buckets(jobs);
  std::vector<Labels> all;
  parallel_by_first_value(
      g, max_r, jobs,
      [&](unsigned w) {
        return [&bucket = buckets[w]](std::span<const std::uint64_t> r) { bucket.emplace_back(r.begin(), r.end()); };
      },
      [&] {
        for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(all));
        std::sort(all.begin(), all.end());
      });
  return all;
}

inline ArithStructure structure_from_labels(const GraphPtr& graph, const Labels& r) {
  std::vector<BigInt> rb;
  std::vector<BigInt> db;
  rb.reserve(r.size());
  db.reserve(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    std::uint64_t sum = 0;
    for (auto u : graph->neighbors(v)) sum += r[u];
    rb.emplace_back(r[v]);
    db.emplace_back(sum / r[v]);
  }
  return {graph, std::move(rb), std::move(db)};
}

}  // namespace detail

/// Number of structures with every r-value in [1, max_r].
inline std::uint64_t count_all(const Graph& g, std::uint64_t max_r, unsigned jobs = 1) {
  jobs = std::max(1u, jobs);
  std::vector<std::uint64_t> counts(jobs, 0);
  std::uint64_t total = 0;
  detail::parallel_by_first_value(
      g, max_r, jobs, [&](unsigned w) { return [&c = counts[w]](std::span<const std::uint64_t>) { ++c; }; },
      [&] {
        for (auto c : counts) total += c;
      });
  return total;
}

/// True when the count at bound equals the count at 2 * bound.
inline bool stability_check(const Graph& g, std::uint64_t bound, unsigned jobs = 1) {
  return count_all(g, bound, jobs) == count_all(g, 2 * bound, jobs);
}

/// Every structure on the graph with all r-values in [1, max_r], sorted by r.
inline EnumerationResult enumerate_all(const GraphPtr& graph, std::uint64_t max_r, EnumerateOptions options = {}) {
  EnumerationResult result{graph->descriptor(), max_r, {}, std::nullopt};
  for (const auto& r : detail::collect_labels(*graph, max_r, options.jobs))
    result.structures.push_back(detail::structure_from_labels(graph, r));
  if (options.check_stability)
    result.stable = result.count() == count_all(*graph, 2 * max_r, options.jobs);
  return result;
}

/// Doubles the bound from start until the count stops changing (or limit is passed).
inline EnumerationResult enumerate_until_stable(const GraphPtr& graph, std::uint64_t start, std::uint64_t limit,
                                                unsigned jobs = 1) {
  for (std::uint64_t bound = start;; bound *= 2) {
    auto result = enumerate_all(graph, bound, {jobs, true});
    if (*result.stable || bound * 2 > limit) return result;
  }
}

namespace detail {

inline std::vector<std::uint64_t> proper_divisors(std::uint64_t c) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t i = 1; i * i <= c; ++i) {
    if (c % i != 0) continue;
    small.push_back(i);
    if (c / i != i) large.push_back(c / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  small.pop_back();  // c itself
  return small;
}

/// For every center c in [2, max_c] and every ordered s-tuple of proper divisors of c
/// with gcd 1, calls visit(c, leaves, path_length) where path_length is the p of the
/// unique smooth structure with those labels.
template <typename Visitor>
void visit_leaf_assignments(std::size_t s, std::uint64_t max_c, Visitor&& visit) {
  if (s == 0) throw DomainError("leaf assignments need s >= 1");
  check_bound(std::max<std::uint64_t>(max_c, 1));
  std::vector<std::uint64_t> leaves(s);
  for (std::uint64_t c = 2; c <= max_c; ++c) {
    const auto divisors = proper_divisors(c);
    auto rec = [&](auto&& self, std::size_t slot, std::uint64_t g, std::uint64_t sum) -> void {
      if (slot == s) {
        if (g == 1) visit(c, std::span<const std::uint64_t>(leaves), smooth_path_length(c, sum));
        return;
      }
      for (auto a : divisors) {
        leaves[slot] = a;
        self(self, slot + 1, std::gcd(g, a), sum + a);
      }
    };
    rec(rec, 0, 0, 0);
  }
}

}  // namespace detail

/// |SArith(CT(q,s))| restricted to r_q <= max_c, for every q that occurs.
inline std::map<std::size_t, std::uint64_t> smooth_counts_by_length(std::size_t s, std::uint64_t max_c) {
  std::map<std::size_t, std::uint64_t> counts;
  detail::visit_leaf_assignments(s, max_c,
                                 [&](std::uint64_t, std::span<const std::uint64_t>, std::size_t p) { ++counts[p]; });
  return counts;
}

inline std::uint64_t count_smooth_ct(std::size_t p, std::size_t s, std::uint64_t max_c) {
  std::uint64_t count = 0;
  detail::visit_leaf_assignments(
      s, max_c, [&](std::uint64_t, std::span<const std::uint64_t>, std::size_t length) { count += length == p; });
  return count;
}

inline bool stability_check_smooth(std::size_t p, std::size_t s, std::uint64_t bound) {
  return count_smooth_ct(p, s, bound) == count_smooth_ct(p, s, 2 * bound);
}

/// Smooth structures on CT(p,s) with center r_p <= max_c, built from leaf assignments.
inline EnumerationResult enumerate_smooth_ct(std::size_t p, std::size_t s, std::uint64_t max_c,
                                             EnumerateOptions options = {}) {
  if (p < 1) throw DomainError("enumerate_smooth_ct needs p >= 1");
  if (s < 2) throw DomainError("enumerate_smooth_ct needs s >= 2");
  auto graph = share(build_coconut_tree(p, s));
  EnumerationResult result{graph->descriptor(), max_c, {}, std::nullopt};
  std::vector<detail::Labels> found;
  detail::visit_leaf_assignments(s, max_c, [&](std::uint64_t c, std::span<const std::uint64_t> a, std::size_t length) {
    if (length != p) return;
    auto r = detail::smooth_path_labels<std::uint64_t>(c, std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    r.insert(r.end(), a.begin(), a.end());
    found.push_back(std::move(r));
  });
  std::sort(found.begin(), found.end());
  for (const auto& r : found) result.structures.push_back(detail::structure_from_labels(graph, r));
  if (options.check_stability) result.stable = result.count() == count_smooth_ct(p, s, 2 * max_c);
  return result;
}

}  // namespace arith
