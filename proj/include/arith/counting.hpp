#pragma once

#include "arith/bigint.hpp"
#include "arith/error.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arith {

/// binom(n, k), multiplicative with the running gcd divided out before each product.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    BigInt divisor(i);
    BigInt g = arith::gcd(result, divisor);
    result /= g;
    divisor /= g;
    result *= BigInt(n - k + i) / divisor;
  }
  return result;
}

inline BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

/// B(n, k) = (n - k + 1)/(n + 1) * binom(n + k, n): lattice paths to (n,k) staying under y = x.
inline BigInt ballot(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw DomainError("ballot number B(" + std::to_string(n) + "," + std::to_string(k) + ") needs k <= n");
  return BigInt(n - k + 1) * binomial(n + k, n) / (n + 1);
}

/// Structures on the path with n vertices: C_{n-1}.
inline BigInt path_count(std::uint64_t n) {
  if (n == 0) throw DomainError("path needs at least one vertex");
  return catalan(n - 1);
}

/// Structures on the cycle with n vertices: binom(2n - 1, n - 1).
inline BigInt cycle_count(std::uint64_t n) {
  if (n < 3) throw DomainError("cycle count needs n >= 3");
  return binomial(2 * n - 1, n - 1);
}

/// Smooth-structure counts |SArith(CT(q,s))| keyed by (q, s), with the search bound
/// each count came from.
class SmoothCountOracle {
 public:
  struct Entry {
    BigInt count;
    std::uint64_t bound = 0;  // max center value searched
    bool stable = false;
    std::string provenance;  // "enumerated" or "cached"
  };

  void set(std::size_t q, std::size_t s, Entry entry) { entries_[{q, s}] = std::move(entry); }

  bool contains(std::size_t q, std::size_t s) const { return entries_.count({q, s}) != 0; }

  const Entry& entry(std::size_t q, std::size_t s) const {
    auto it = entries_.find({q, s});
    if (it == entries_.end()) throw OracleMissError(q, s);
    return it->second;
  }

  const BigInt& lookup(std::size_t q, std::size_t s) const { return entry(q, s).count; }

  const std::map<std::pair<std::size_t, std::size_t>, Entry>& entries() const noexcept { return entries_; }

 private:
  std::map<std::pair<std::size_t, std::size_t>, Entry> entries_;
};

/// The (q, s) cells that ct_count(p, s) reads from the oracle.
inline std::vector<std::pair<std::size_t, std::size_t>> required_oracle_cells(std::size_t p, std::size_t s) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t y = 2; y <= s; ++y)
    for (std::size_t q = 1; q <= p; ++q) cells.emplace_back(q, y);
  return cells;
}

/// A(x, 0) = C_{x-1};  A(x, 1) = C_{x-1} - C_{x-2};
/// A(x, y) = sum_{i=y+1}^{x} B(x-y-1, x-i) |SArith(CT(i-y, y))| for y >= 2.
inline BigInt leaf_class_count(std::int64_t x, std::int64_t y, const SmoothCountOracle& oracle) {
  if (y == 0 && x >= 1) return catalan(static_cast<std::uint64_t>(x - 1));
  if (y == 1 && x >= 2)
    return catalan(static_cast<std::uint64_t>(x - 1)) - catalan(static_cast<std::uint64_t>(x - 2));
  if (y >= 2 && x >= 3) {
    BigInt total(0);
    for (std::int64_t i = y + 1; i <= x; ++i)
      total += ballot(static_cast<std::uint64_t>(x - y - 1), static_cast<std::uint64_t>(x - i)) *
               oracle.lookup(static_cast<std::size_t>(i - y), static_cast<std::size_t>(y));
    return total;
  }
  throw DomainError("A(" + std::to_string(x) + "," + std::to_string(y) + ") is undefined");
}

/// |Arith(CT(p,s))| = sum_{j=0}^{s} binom(s, j) A(p + s - j, s - j), for p >= 1, s >= 2.
inline BigInt ct_count(std::size_t p, std::size_t s, const SmoothCountOracle& oracle) {
  if (p < 1 || s < 2) throw DomainError("ct_count needs p >= 1 and s >= 2");
  BigInt total(0);
  for (std::size_t j = 0; j <= s; ++j)
    total += binomial(s, j) * leaf_class_count(static_cast<std::int64_t>(p + s - j),
                                               static_cast<std::int64_t>(s - j), oracle);
  return total;
}

/// Structures on CT(p,s) with no smoothable leaf: sum_{i=1}^{p} B(p-1, p-i) |SArith(CT(i,s))|.
inline BigInt nonsmoothable_leaf_count(std::size_t p, std::size_t s, const SmoothCountOracle& oracle) {
  if (p < 1 || s < 2) throw DomainError("nonsmoothable_leaf_count needs p >= 1 and s >= 2");
  BigInt total(0);
  for (std::size_t i = 1; i <= p; ++i) total += ballot(p - 1, p - i) * oracle.lookup(i, s);
  return total;
}

/// Bident form: 2 C_p - C_{p-1} + sum_{i=3}^{p+2} B(p-1, p+2-i) |SArith(CT(i-2, 2))|.
inline BigInt bident_count(std::size_t p, const SmoothCountOracle& oracle) {
  if (p < 1) throw DomainError("bident_count needs p >= 1");
  BigInt total = 2 * catalan(p) - catalan(p - 1);
  for (std::size_t i = 3; i <= p + 2; ++i) total += ballot(p - 1, p + 2 - i) * oracle.lookup(i - 2, 2);
  return total;
}

/// Star form: 1 + sum_{j=0}^{s-2} binom(s, j) |SArith(CT(1, s-j))|.
inline BigInt star_count(std::size_t s, const SmoothCountOracle& oracle) {
  if (s < 2) throw DomainError("star_count needs s >= 2");
  BigInt total(1);
  for (std::size_t j = 0; j + 2 <= s; ++j) total += binomial(s, j) * oracle.lookup(1, s - j);
  return total;
}

}  // namespace arith
