#pragma once

#include "arith/bigint.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/structure.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arith {

/// A vertex of CT(p,s) named the way the labels read: v_k on the path or leaf l_j, both 1-based.
struct CtVertex {
  enum class Kind { path, leaf };
  Kind kind = Kind::path;
  std::size_t k = 1;

  static CtVertex path(std::size_t k) { return {Kind::path, k}; }
  static CtVertex leaf(std::size_t j) { return {Kind::leaf, j}; }

  std::string name() const { return (kind == Kind::path ? "v" : "l") + std::to_string(k); }
  bool operator==(const CtVertex&) const = default;
};

namespace detail {

inline std::vector<BigInt> path_part(const ArithStructure& x, const CoconutShape& shape) {
  return {x.r.begin(), x.r.begin() + static_cast<std::ptrdiff_t>(shape.p)};
}

/// Per-structure graph cache so transforms on one shape share a single Graph.
class CoconutGraphs {
 public:
  GraphPtr get(std::size_t p, std::size_t s) {
    auto [it, inserted] = cache_.try_emplace({p, s});
    if (inserted) it->second = share(build_coconut_tree(p, s));
    return it->second;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, GraphPtr> cache_;
};

}  // namespace detail

/// Removes a vertex with d = 1: a path vertex v_k (k <= p-1) or a leaf l_j. The neighbours
/// of the removed vertex lose 1 from d, and labels after it shift down by one slot.
///
/// Removing a leaf from CT(p,1) leaves the path P_p (family path, no coconut shape).
inline ArithStructure smooth_at(const ArithStructure& x, CtVertex vertex) {
  const auto& shape = x.shape();
  std::size_t index = 0;
  if (vertex.kind == CtVertex::Kind::path) {
    if (vertex.k == 0 || vertex.k > shape.p)
      throw PositionError("path vertex " + vertex.name() + " out of range for CT(" +
                          std::to_string(shape.p) + "," + std::to_string(shape.s) + ")");
    if (vertex.k == shape.p) throw PositionError("cannot smooth the central vertex " + vertex.name());
    index = shape.path_index(vertex.k);
  } else {
    if (vertex.k == 0 || vertex.k > shape.s)
      throw PositionError("leaf " + vertex.name() + " out of range for CT(" + std::to_string(shape.p) +
                          "," + std::to_string(shape.s) + ")");
    if (shape.p == 1 && shape.s == 1)
      throw PositionError("smoothing a leaf of CT(1,1) would leave a single vertex");
    index = shape.leaf_index(vertex.k);
  }
  if (x.d[index] != 1)
    throw NotSmoothableError("d at " + vertex.name() + " is " + x.d[index].str() + ", expected 1");

  std::vector<BigInt> r;
  std::vector<BigInt> d;
  r.reserve(x.r.size() - 1);
  d.reserve(x.r.size() - 1);
  const auto& graph = x.g();
  for (std::size_t v = 0; v < x.r.size(); ++v) {
    if (v == index) continue;
    r.push_back(x.r[v]);
    d.push_back(graph.adjacent(v, index) ? x.d[v] - 1 : x.d[v]);
  }

  GraphPtr next;
  if (vertex.kind == CtVertex::Kind::leaf && shape.s == 1)
    next = share(build_path(shape.p));
  else if (vertex.kind == CtVertex::Kind::leaf)
    next = share(build_coconut_tree(shape.p, shape.s - 1));
  else
    next = share(build_coconut_tree(shape.p - 1, shape.s));
  return {std::move(next), std::move(r), std::move(d)};
}

/// Smooths path vertices with d = 1 (lowest index first) until none remain.
/// Leaves must all have d >= 2.
inline ArithStructure smooth_ancestor(const ArithStructure& x) {
  const auto& shape = x.shape();
  for (std::size_t j = 1; j <= shape.s; ++j)
    if (x.d[shape.leaf_index(j)] == 1) throw LeafSmoothableError(j);
  ArithStructure current = x;
  for (;;) {
    const auto& cs = current.shape();
    std::optional<std::size_t> target;
    for (std::size_t k = 1; k < cs.p && !target; ++k)
      if (current.d[cs.path_index(k)] == 1) target = k;
    if (!target) return current;
    current = smooth_at(current, CtVertex::path(*target));
  }
}

/// Inserts a path vertex in front of v_i carrying r_{i-1} + r_i (just r_1 when i = 1) and d = 1.
inline ArithStructure subdivide(const ArithStructure& x, std::size_t i, GraphPtr target = nullptr) {
  const auto& shape = x.shape();
  if (i == 0 || i > shape.p)
    throw PositionError("subdivision position " + std::to_string(i) + " out of range 1.." +
                        std::to_string(shape.p));
  const std::size_t at = shape.path_index(i);
  std::vector<BigInt> r(x.r);
  std::vector<BigInt> d(x.d);
  BigInt label = x.r[at];
  if (i > 1) {
    label += x.r[at - 1];
    d[at - 1] += 1;
  }
  d[at] += 1;
  r.insert(r.begin() + static_cast<std::ptrdiff_t>(at), std::move(label));
  d.insert(d.begin() + static_cast<std::ptrdiff_t>(at), BigInt(1));
  if (!target) target = share(build_coconut_tree(shape.p + 1, shape.s));
  return {std::move(target), std::move(r), std::move(d)};
}

/// b = (b_1..b_k) is valid for a structure on CT(base_p, s) when 1 <= b_i <= base_p + i - 1.
struct SubdivisionSequence {
  std::vector<std::size_t> b;
  std::size_t base_p = 1;

  /// 1-based index of the first entry out of range, if any.
  std::optional<std::size_t> first_violation() const {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] < 1 || b[i] > base_p + i) return i + 1;
    return std::nullopt;
  }
  bool valid() const { return !first_violation(); }
  bool ascending() const { return std::is_sorted(b.begin(), b.end()); }

  bool operator==(const SubdivisionSequence&) const = default;
};

/// Folds subdivide over b from left to right.
inline ArithStructure apply_subdivision_sequence(const ArithStructure& x, std::span<const std::size_t> b) {
  const auto& shape = x.shape();
  SubdivisionSequence seq{{b.begin(), b.end()}, shape.p};
  if (auto bad = seq.first_violation())
    throw InvalidSequenceError(*bad, "b_" + std::to_string(*bad) + " = " + std::to_string(b[*bad - 1]) +
                                         " violates 1 <= b_i <= " + std::to_string(shape.p + *bad - 1));
  ArithStructure current = x;
  for (auto position : b) current = subdivide(current, position);
  return current;
}

/// A north/east lattice path from (0,0) to (n,k) that never rises above y = x,
/// stored as the sorted x-coordinates of its k north steps.
class LatticePath {
 public:
  static LatticePath make(std::size_t n, std::vector<std::size_t> north_step_xs) {
    std::sort(north_step_xs.begin(), north_step_xs.end());
    const std::size_t k = north_step_xs.size();
    if (k > n) throw DomainError("lattice path needs k <= n");
    for (std::size_t j = 0; j < k; ++j) {
      if (north_step_xs[j] > n) throw DomainError("north step beyond x = n");
      if (north_step_xs[j] < j + 1)
        throw DomainError("north step " + std::to_string(j + 1) + " at x = " +
                          std::to_string(north_step_xs[j]) + " crosses above y = x");
    }
    return LatticePath(n, std::move(north_step_xs));
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return xs_.size(); }
  const std::vector<std::size_t>& north_step_xs() const noexcept { return xs_; }

  bool operator==(const LatticePath&) const = default;

 private:
  LatticePath(std::size_t n, std::vector<std::size_t> xs) : n_(n), xs_(std::move(xs)) {}
  std::size_t n_;
  std::vector<std::size_t> xs_;
};

/// b = ascending sort of (n + 1 - x) over the north steps. The result is valid for a
/// structure with path length n - k + 1, the seed length whose descendants on
/// CT(n + 1, s) these paths count.
inline SubdivisionSequence sequence_from_lattice_path(const LatticePath& path) {
  SubdivisionSequence seq;
  seq.base_p = path.n() - path.k() + 1;
  for (auto x : path.north_step_xs()) seq.b.push_back(path.n() + 1 - x);
  std::sort(seq.b.begin(), seq.b.end());
  return seq;
}

inline LatticePath lattice_path_from_sequence(const SubdivisionSequence& seq) {
  const std::size_t n = seq.base_p + seq.b.size() - 1;
  std::vector<std::size_t> xs;
  for (auto b : seq.b) {
    if (b < 1 || b > n) throw DomainError("sequence entry outside 1..n");
    xs.push_back(n + 1 - b);
  }
  return LatticePath::make(n, std::move(xs));
}

/// Every lattice path to (n,k), in lexicographic order of north-step coordinates.
inline std::vector<LatticePath> lattice_paths(std::size_t n, std::size_t k) {
  if (k > n) throw DomainError("lattice paths need k <= n");
  std::vector<LatticePath> out;
  std::vector<std::size_t> xs;
  auto rec = [&](auto&& self, std::size_t lo) -> void {
    if (xs.size() == k) {
      out.push_back(LatticePath::make(n, xs));
      return;
    }
    for (std::size_t x = std::max(lo, xs.size() + 1); x <= n; ++x) {
      xs.push_back(x);
      self(self, x);
      xs.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Every valid subdivision sequence of length k for base_p, ascending or not.
inline std::vector<std::vector<std::size_t>> all_subdivision_sequences(std::size_t base_p, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> b;
  auto rec = [&](auto&& self) -> void {
    if (b.size() == k) {
      out.push_back(b);
      return;
    }
    for (std::size_t v = 1; v <= base_p + b.size(); ++v) {
      b.push_back(v);
      self(self);
      b.pop_back();
    }
  };
  rec(rec);
  return out;
}

namespace detail {

inline void require_smooth_seed(const ArithStructure& seed, std::size_t p) {
  const auto& shape = seed.shape();
  if (!is_smooth(seed)) throw NotSmoothError("descendants need a smooth seed");
  if (p < shape.p)
    throw DomainError("target path length " + std::to_string(p) + " is below the seed's " +
                      std::to_string(shape.p));
}

inline void sort_and_check_unique(std::vector<ArithStructure>& xs) {
  std::sort(xs.begin(), xs.end(), r_less);
  auto dup = std::adjacent_find(xs.begin(), xs.end(),
                                [](const auto& a, const auto& b) { return a.r == b.r; });
  if (dup != xs.end()) throw std::logic_error("distinct ascending subdivision sequences collided");
}

}  // namespace detail

/// All structures on CT(p,s) that smooth back to the seed, sorted by r.
/// Uses one ascending subdivision sequence per lattice path to (p-1, p-i).
inline std::vector<ArithStructure> descendants(const ArithStructure& seed, std::size_t p) {
  detail::require_smooth_seed(seed, p);
  const std::size_t i = seed.shape().p;
  const std::size_t k = p - i;
  detail::CoconutGraphs graphs;
  std::vector<ArithStructure> out;
  for (const auto& path : lattice_paths(p - 1, k)) {
    ArithStructure current = seed;
    for (auto position : sequence_from_lattice_path(path).b)
      current = subdivide(current, position, graphs.get(current.shape().p + 1, current.shape().s));
    out.push_back(std::move(current));
  }
  detail::sort_and_check_unique(out);
  return out;
}

/// Cross-check for descendants(): every valid sequence of length p - i, deduplicated by r.
inline std::vector<ArithStructure> descendants_exhaustive(const ArithStructure& seed, std::size_t p) {
  detail::require_smooth_seed(seed, p);
  const std::size_t i = seed.shape().p;
  detail::CoconutGraphs graphs;
  std::vector<ArithStructure> out;
  for (const auto& b : all_subdivision_sequences(i, p - i)) {
    ArithStructure current = seed;
    for (auto position : b)
      current = subdivide(current, position, graphs.get(current.shape().p + 1, current.shape().s));
    out.push_back(std::move(current));
  }
  std::sort(out.begin(), out.end(), r_less);
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.r == b.r; }),
            out.end());
  return out;
}

/// Adds leaves labelled r_p at the chosen 1-based slots of CT(p,s); the old leaf labels
/// fill the remaining slots in their listed order.
///
/// The input is a structure on CT(p, s - j), or on the path P_p (no leaves). For P_1 only
/// r matters: r = (1) with d = (0) is accepted.
inline ArithStructure expand_leaves(const ArithStructure& x, std::size_t s, std::span<const std::size_t> positions) {
  std::size_t p = 0;
  std::vector<BigInt> path;
  std::vector<BigInt> old_leaves;
  if (const auto& shape = x.g().coconut()) {
    p = shape->p;
    path = detail::path_part(x, *shape);
    old_leaves = leaf_values(x);
  } else if (x.g().family() == GraphFamily::path) {
    p = x.g().vertex_count();
    path = x.r;
  } else {
    throw ShapeError("expand_leaves needs a coconut tree or a path");
  }
  if (positions.size() + old_leaves.size() != s)
    throw PositionError("chose " + std::to_string(positions.size()) + " new leaves, but " +
                        std::to_string(s) + " - " + std::to_string(old_leaves.size()) + " are needed");
  std::vector<char> chosen(s + 1, 0);
  for (auto slot : positions) {
    if (slot == 0 || slot > s) throw PositionError("leaf slot " + std::to_string(slot) + " out of range");
    if (chosen[slot]) throw PositionError("leaf slot " + std::to_string(slot) + " chosen twice");
    chosen[slot] = 1;
  }
  std::vector<BigInt> r = path;
  auto next_old = old_leaves.begin();
  for (std::size_t slot = 1; slot <= s; ++slot) r.push_back(chosen[slot] ? path.back() : *next_old++);
  return from_r(share(build_coconut_tree(p, s)), std::move(r));
}

}  // namespace arith
