#pragma once

#include "arith/bigint.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/structure.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace arith {

/// x_1, x_2 and then x_{i+1} = (-x_{i-1}) mod x_i while x_i is not 0 or 1.
/// Only the positive terms are kept; after index 2 they strictly decrease.
template <typename Int>
struct EuclideanChain {
  Int x1;
  Int x2;
  std::vector<Int> terms;

  std::size_t length() const noexcept { return terms.size(); }
};

template <typename Int>
EuclideanChain<Int> chain(const Int& x1, const Int& x2) {
  if (x1 < 1) throw DomainError("Euclidean chain needs x1 >= 1");
  if (is_negative(x2)) throw DomainError("Euclidean chain needs x2 >= 0");
  EuclideanChain<Int> c{x1, x2, {x1}};
  if (x2 == 0) return c;
  c.terms.push_back(x2);
  while (c.terms.back() != 1) {
    const Int& current = c.terms.back();
    Int next = neg_mod(c.terms[c.terms.size() - 2], current);
    if (next == 0) break;
    c.terms.push_back(std::move(next));
  }
  return c;
}

/// Chain length F(x, y): the number of positive terms of chain(x, y).
template <typename Int>
std::size_t chain_length(const Int& x, const Int& y) {
  if (x < 1) throw DomainError("F needs x >= 1");
  if (y == 0) return 1;
  Int previous = x;
  Int current = y;
  std::size_t count = 2;
  while (current != 1) {
    Int next = neg_mod(previous, current);
    if (next == 0) break;
    previous = std::move(current);
    current = std::move(next);
    ++count;
  }
  return count;
}

/// Center label c and ordered leaf labels a_1..a_s of a smooth structure.
struct LeafAssignment {
  BigInt c;
  std::vector<BigInt> a;

  BigInt leaf_sum() const { return std::accumulate(a.begin(), a.end(), BigInt(0)); }
};

/// Throws AssignmentError unless every a_i is a proper divisor of c and gcd(c, a) = 1.
inline void check_assignment(const LeafAssignment& la) {
  if (la.a.empty()) throw AssignmentError("leaf assignment needs at least one leaf");
  if (la.c < 2) throw AssignmentError("center value must be at least 2");
  BigInt g = la.c;
  for (std::size_t i = 0; i < la.a.size(); ++i) {
    const auto& a = la.a[i];
    const auto label = "a_" + std::to_string(i + 1) + " = " + a.str();
    if (a < 1) throw AssignmentError(label + " is not positive");
    if (!(a < la.c)) throw AssignmentError(label + " is not below the center " + la.c.str());
    if (la.c % a != 0) throw AssignmentError(label + " does not divide the center " + la.c.str());
    g = arith::gcd(g, a);
  }
  if (g != 1) throw AssignmentError("gcd of center and leaves is " + g.str() + ", expected 1");
}

namespace detail {

/// Path labels r_1 < ... < r_p = c: the chain seeded (c, (-sum a) mod c), reversed.
template <typename Int>
std::vector<Int> smooth_path_labels(const Int& c, const Int& leaf_sum) {
  auto ch = chain(c, neg_mod(leaf_sum, c));
  std::reverse(ch.terms.begin(), ch.terms.end());
  return std::move(ch.terms);
}

}  // namespace detail

/// The unique smooth structure with r_p = c and leaves a, on CT(F(sum a, c) - 1, s).
inline ArithStructure construct_smooth(const LeafAssignment& la, GraphPtr graph = nullptr) {
  check_assignment(la);
  auto r = detail::smooth_path_labels(la.c, la.leaf_sum());
  const std::size_t p = r.size();
  r.insert(r.end(), la.a.begin(), la.a.end());
  if (!graph) {
    graph = share(build_coconut_tree(p, la.a.size()));
  } else if (graph->require_coconut() != CoconutShape{p, la.a.size()}) {
    throw ShapeError("supplied graph does not match CT(" + std::to_string(p) + "," +
                     std::to_string(la.a.size()) + ")");
  }
  return from_r(std::move(graph), std::move(r));
}

/// Path length of the smooth structure construct_smooth would build, without building it.
template <typename Int>
std::size_t smooth_path_length(const Int& c, const Int& leaf_sum) {
  return chain_length(c, neg_mod(leaf_sum, c));
}

/// d_p > 1 on a smooth structure.
inline bool has_dp_gt1(const ArithStructure& x) {
  return x.d[x.shape().center()] > 1;
}

namespace detail {

inline void require_primitive_leaves(std::span<const BigInt> a) {
  if (a.empty()) throw GcdError("leaf tuple is empty");
  for (const auto& v : a)
    if (v < 1) throw GcdError("leaf values must be positive");
  auto g = gcd_of<BigInt>(a);
  if (g != 1) throw GcdError("gcd of leaf values is " + g.str() + ", expected 1");
}

}  // namespace detail

/// |{n >= 1 : n * lcm(a) < sum(a)}|, the set-definition count of centers with d_p > 1.
inline BigInt count_dp_gt1(std::span<const BigInt> a) {
  detail::require_primitive_leaves(a);
  const BigInt l = lcm_of<BigInt>(a);
  const BigInt sum = std::accumulate(a.begin(), a.end(), BigInt(0));
  return (sum - 1) / l;
}

/// floor(sum(a) / lcm(a)). Differs from count_dp_gt1 exactly when lcm(a) divides sum(a).
inline BigInt count_dp_gt1_floor(std::span<const BigInt> a) {
  detail::require_primitive_leaves(a);
  return std::accumulate(a.begin(), a.end(), BigInt(0)) / lcm_of<BigInt>(a);
}

/// Centers n * lcm(a) counted by count_dp_gt1 that also admit a construction, i.e. exceed max(a).
inline std::vector<BigInt> constructible_dp_gt1_centers(std::span<const BigInt> a) {
  const BigInt count = count_dp_gt1(a);
  const BigInt l = lcm_of<BigInt>(a);
  const BigInt top = *std::max_element(a.begin(), a.end());
  std::vector<BigInt> centers;
  for (BigInt n = 1; n <= count; ++n) {
    BigInt c = n * l;
    if (c > top) centers.push_back(std::move(c));
  }
  return centers;
}

}  // namespace arith
