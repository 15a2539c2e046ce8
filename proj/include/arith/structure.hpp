#pragma once

#include "arith/bigint.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/kernel.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace arith {

/// Pair (d, r) on a graph. Plain data: construction does not validate, use validate().
struct ArithStructure {
  GraphPtr graph;
  std::vector<BigInt> r;
  std::vector<BigInt> d;

  const Graph& g() const { return *graph; }
  const CoconutShape& shape() const { return graph->require_coconut(); }

  bool operator==(const ArithStructure& other) const {
    return r == other.r && d == other.d && *graph == *other.graph;
  }
};

/// Canonical order of result sets: lexicographic by r (d is determined by r).
inline bool r_less(const ArithStructure& a, const ArithStructure& b) {
  return std::lexicographical_compare(a.r.begin(), a.r.end(), b.r.begin(), b.r.end());
}

enum class FailureReason { divisibility, gcd, nonpositive };

inline std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::divisibility:
      return "divisibility";
    case FailureReason::gcd:
      return "gcd";
    case FailureReason::nonpositive:
      return "nonpositive";
  }
  return "unknown";
}

struct ValidationFailure {
  std::optional<std::size_t> vertex;  // empty for the global gcd condition
  FailureReason reason;

  bool operator==(const ValidationFailure&) const = default;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool valid() const noexcept { return failures.empty(); }
  bool has(FailureReason reason) const {
    return std::any_of(failures.begin(), failures.end(),
                       [&](const auto& f) { return f.reason == reason; });
  }
};

namespace detail {

inline void require_length(const Graph& g, std::size_t length, std::string_view name) {
  if (length != g.vertex_count())
    throw DomainError(std::string(name) + " has " + std::to_string(length) +
                      " entries, graph has " + std::to_string(g.vertex_count()) + " vertices");
}

inline BigInt neighbor_sum(const Graph& g, std::span<const BigInt> r, std::size_t v) {
  BigInt sum(0);
  for (auto u : g.neighbors(v)) sum += r[u];
  return sum;
}

}  // namespace detail

/// d_v = (sum of r over the neighbours of v) / r_v. Throws DivisibilityError(v) on the
/// first vertex whose value does not divide its neighbour sum.
inline std::vector<BigInt> d_from_r(const Graph& g, std::span<const BigInt> r) {
  detail::require_length(g, r.size(), "r");
  std::vector<BigInt> d(r.size());
  for (std::size_t v = 0; v < r.size(); ++v) {
    if (r[v] <= 0) throw DomainError("r must be strictly positive (vertex " + std::to_string(v + 1) + ")");
    BigInt sum = detail::neighbor_sum(g, r, v);
    if (sum % r[v] != 0) throw DivisibilityError(v);
    d[v] = sum / r[v];
  }
  return d;
}

/// Builds the (d, r) pair from r alone.
inline ArithStructure from_r(GraphPtr graph, std::vector<BigInt> r) {
  auto d = d_from_r(*graph, r);
  return {std::move(graph), std::move(r), std::move(d)};
}

/// The matrix diag(d) - A.
inline IntMatrix<BigInt> laplacian_like(const Graph& g, std::span<const BigInt> d) {
  const auto n = g.vertex_count();
  IntMatrix<BigInt> m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    m(v, v) = d[v];
    for (auto u : g.neighbors(v)) m(v, u) -= 1;
  }
  return m;
}

/// The unique primitive positive r with (diag(d) - A) r = 0, by exact elimination.
inline std::vector<BigInt> r_from_d(const Graph& g, std::span<const BigInt> d) {
  detail::require_length(g, d.size(), "d");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] <= 0) throw DomainError("d must be strictly positive (vertex " + std::to_string(v + 1) + ")");
  auto basis = integer_kernel(laplacian_like(g, d));
  if (basis.size() != 1) throw KernelDimensionError(basis.size());
  auto r = std::move(basis.front());
  if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x <= 0; }))
    throw NonPositiveKernelError();
  return r;
}

inline ValidationReport validate(const ArithStructure& x) {
  const Graph& g = x.g();
  detail::require_length(g, x.r.size(), "r");
  detail::require_length(g, x.d.size(), "d");
  ValidationReport report;
  bool all_positive = true;
  for (std::size_t v = 0; v < x.r.size(); ++v) {
    if (x.r[v] <= 0 || x.d[v] <= 0) {
      report.failures.push_back({v, FailureReason::nonpositive});
      all_positive = false;
    }
  }
  for (std::size_t v = 0; v < x.r.size(); ++v)
    if (x.d[v] * x.r[v] != detail::neighbor_sum(g, x.r, v))
      report.failures.push_back({v, FailureReason::divisibility});
  if (all_positive && gcd_of<BigInt>(x.r) != 1)
    report.failures.push_back({std::nullopt, FailureReason::gcd});
  return report;
}

inline bool is_valid(const ArithStructure& x) { return validate(x).valid(); }

/// d >= 2 on v_1..v_{p-1} and on every leaf; d_p is unconstrained.
inline bool is_smooth(const ArithStructure& x) {
  const auto& shape = x.shape();
  for (std::size_t v = 0; v < shape.vertex_count(); ++v) {
    if (v == shape.center()) continue;
    if (x.d[v] < 2) return false;
  }
  return true;
}

/// r_1 < r_2 < ... < r_p.
inline bool path_strictly_increasing(const ArithStructure& x) {
  const auto& shape = x.shape();
  for (std::size_t k = 1; k < shape.p; ++k)
    if (!(x.r[shape.path_index(k)] < x.r[shape.path_index(k + 1)])) return false;
  return true;
}

/// 0 < r_2 - r_1 <= r_3 - r_2 <= ... <= r_p - r_{p-1}.
inline bool path_differences_nondecreasing(const ArithStructure& x) {
  const auto& shape = x.shape();
  BigInt previous(0);
  for (std::size_t k = 1; k < shape.p; ++k) {
    BigInt diff = x.r[shape.path_index(k + 1)] - x.r[shape.path_index(k)];
    if (k == 1 ? diff <= 0 : diff < previous) return false;
    previous = diff;
  }
  return true;
}

/// Smoothness read off r alone: every leaf below r_p and the path strictly increasing.
inline bool smooth_by_r(const ArithStructure& x) {
  const auto& shape = x.shape();
  const auto& center = x.r[shape.center()];
  for (std::size_t j = 1; j <= shape.s; ++j)
    if (!(x.r[shape.leaf_index(j)] < center)) return false;
  return path_strictly_increasing(x);
}

inline std::vector<BigInt> leaf_values(const ArithStructure& x) {
  const auto& shape = x.shape();
  return {x.r.begin() + static_cast<std::ptrdiff_t>(shape.p), x.r.end()};
}

}  // namespace arith
