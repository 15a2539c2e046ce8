#pragma once

#include "arith/bigint.hpp"
#include "arith/counting.hpp"
#include "arith/enumerate.hpp"
#include "arith/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace arith {

/// One (p, s) cell: brute-force |Arith(CT(p,s))| against the counting formula.
struct VerifyCell {
  std::size_t p = 0;
  std::size_t s = 0;
  std::uint64_t brute_force = 0;
  BigInt formula;
  bool brute_force_stable = false;
  bool oracle_stable = false;

  bool stable() const noexcept { return brute_force_stable && oracle_stable; }
  bool match() const { return formula == brute_force; }
};

struct VerifyReport {
  std::uint64_t bound = 0;
  std::vector<VerifyCell> cells;

  /// True when every stable cell matches. Unstable cells are reported but not judged.
  bool passed() const {
    for (const auto& c : cells)
      if (c.stable() && !c.match()) return false;
    return true;
  }
  std::size_t stable_cells() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.stable();
    return n;
  }
};

/// Fresh oracle for every (q, y) with q <= p_max and 2 <= y <= s_max, searched to max_c
/// and flagged stable when the count at 2 * max_c agrees.
inline SmoothCountOracle build_smooth_oracle(std::size_t p_max, std::size_t s_max, std::uint64_t max_c) {
  SmoothCountOracle oracle;
  for (std::size_t y = 2; y <= s_max; ++y) {
    const auto at_bound = smooth_counts_by_length(y, max_c);
    const auto at_double = smooth_counts_by_length(y, 2 * max_c);
    for (std::size_t q = 1; q <= p_max; ++q) {
      auto get = [q](const std::map<std::size_t, std::uint64_t>& m) {
        auto it = m.find(q);
        return it == m.end() ? std::uint64_t{0} : it->second;
      };
      oracle.set(q, y, {BigInt(get(at_bound)), max_c, get(at_bound) == get(at_double), "enumerated"});
    }
  }
  return oracle;
}

inline VerifyReport verify_counts(std::size_t p_max, std::size_t s_max, std::uint64_t bound, unsigned jobs = 1) {
  VerifyReport report{bound, {}};
  const auto oracle = build_smooth_oracle(p_max, s_max, bound);
  for (std::size_t p = 1; p <= p_max; ++p) {
    for (std::size_t s = 2; s <= s_max; ++s) {
      const auto graph = build_coconut_tree(p, s);
      VerifyCell cell;
      cell.p = p;
      cell.s = s;
      cell.brute_force = count_all(graph, bound, jobs);
      cell.brute_force_stable = cell.brute_force == count_all(graph, 2 * bound, jobs);
      cell.formula = ct_count(p, s, oracle);
      cell.oracle_stable = true;
      for (auto [q, y] : required_oracle_cells(p, s)) cell.oracle_stable = cell.oracle_stable && oracle.entry(q, y).stable;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace arith
