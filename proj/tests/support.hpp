#pragma once

#include "arith/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using arith::BigInt;
using Labels = std::vector<std::uint64_t>;

inline arith::GraphPtr ct(std::size_t p, std::size_t s) { return arith::share(arith::build_coconut_tree(p, s)); }
inline arith::GraphPtr path(std::size_t n) { return arith::share(arith::build_path(n)); }
inline arith::GraphPtr cycle(std::size_t n) { return arith::share(arith::build_cycle(n)); }

inline std::vector<BigInt> big(std::initializer_list<std::uint64_t> v) { return arith::to_big(v); }

inline arith::ArithStructure on(const arith::GraphPtr& g, std::initializer_list<std::uint64_t> r) {
  return arith::from_r(g, big(r));
}

/// Plain odometer over [1, m]^n with an exact check of every vertex; no pruning.
inline std::vector<Labels> naive_structures(const arith::Graph& g, std::uint64_t m) {
  const auto n = g.vertex_count();
  std::vector<Labels> out;
  Labels r(n, 1);
  for (;;) {
    std::uint64_t gg = 0;
    for (auto x : r) gg = std::gcd(gg, x);
    bool ok = gg == 1;
    for (std::size_t v = 0; ok && v < n; ++v) {
      std::uint64_t sum = 0;
      for (auto u : g.neighbors(v)) sum += r[u];
      ok = sum % r[v] == 0;
    }
    if (ok) out.push_back(r);
    std::size_t i = n;
    while (i > 0 && r[i - 1] == m) r[--i] = 1;
    if (i == 0) break;
    ++r[i - 1];
  }
  return out;
}

/// Rank of an integer matrix over the rationals by ordinary Gaussian elimination.
inline std::size_t rational_rank(const std::vector<std::vector<BigInt>>& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) {
    std::vector<Q> q;
    for (const auto& x : row) q.emplace_back(x);
    a.push_back(std::move(q));
  }
  if (a.empty()) return 0;
  const auto rows = a.size();
  const auto cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// F by the definition: count positive terms of x_{i+1} = (-x_{i-1}) mod x_i.
inline std::size_t naive_F(std::int64_t x, std::int64_t y) {
  std::vector<std::int64_t> xs{x, y};
  while (xs.back() > 0) {
    auto a = xs[xs.size() - 2];
    auto m = xs.back();
    xs.push_back(((-a) % m + m) % m);
  }
  return xs.size() - 1;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

/// Smoothness straight from the d-values.
inline bool smooth_by_d(const arith::ArithStructure& x) {
  const auto& shape = x.shape();
  for (std::size_t v = 0; v < shape.vertex_count(); ++v)
    if (v != shape.center() && x.d[v] < 2) return false;
  return true;
}

}  // namespace testing_support
