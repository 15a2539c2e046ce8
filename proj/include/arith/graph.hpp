#pragma once

#include "arith/error.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arith {

/// Vertex layout of the coconut tree CT(p,s): a path v_1..v_p with s leaves hanging off v_p.
///
/// Path vertex v_k lives at index k-1 and leaf l_j at index p+j-1, so r and d vectors
/// serialize as (r_1..r_p, r_l1..r_ls).
struct CoconutShape {
  std::size_t p = 0;
  std::size_t s = 0;

  std::size_t path_index(std::size_t k) const { return k - 1; }
  std::size_t leaf_index(std::size_t j) const { return p + j - 1; }
  std::size_t center() const { return p - 1; }
  std::size_t vertex_count() const { return p + s; }
  bool is_leaf_index(std::size_t v) const { return v >= p && v < p + s; }

  bool operator==(const CoconutShape&) const = default;
};

enum class GraphFamily { custom, path, cycle, coconut_tree };

/// Simple undirected connected graph with 0-based vertex indices. Immutable once built.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Builds a graph from 0-based edges. Rejects self-loops, repeated edges,
  /// out-of-range endpoints and disconnected inputs.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    return Graph(vertex_count, edges, GraphFamily::custom, std::nullopt);
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  bool adjacent(std::size_t u, std::size_t v) const {
    const auto& n = adjacency_.at(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
      for (auto v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  GraphFamily family() const noexcept { return family_; }
  const std::optional<CoconutShape>& coconut() const noexcept { return coconut_; }

  const CoconutShape& require_coconut() const {
    if (!coconut_) throw ShapeError("graph is not a coconut tree CT(p,s)");
    return *coconut_;
  }

  /// Compact descriptor: ct:p,s | path:n | cycle:n | custom:n.
  std::string descriptor() const {
    const auto n = std::to_string(vertex_count());
    switch (family_) {
      case GraphFamily::coconut_tree:
        return "ct:" + std::to_string(coconut_->p) + "," + std::to_string(coconut_->s);
      case GraphFamily::path:
        return "path:" + n;
      case GraphFamily::cycle:
        return "cycle:" + n;
      case GraphFamily::custom:
        break;
    }
    return "custom:" + n;
  }

  bool operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_ && coconut_ == other.coconut_;
  }

  friend Graph build_coconut_tree(std::size_t p, std::size_t s);
  friend Graph build_path(std::size_t n);
  friend Graph build_cycle(std::size_t n);

 private:
  Graph(std::size_t n, std::span<const Edge> edges, GraphFamily family,
        std::optional<CoconutShape> shape)
      : adjacency_(n), family_(family), coconut_(shape) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u + 1));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw GraphError("repeated edge; graphs must be simple");
    }
    edge_count_ = edges.size();
    if (!connected()) throw GraphError("graph is not connected");
  }

  bool connected() const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : adjacency_[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    return reached == adjacency_.size();
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
  GraphFamily family_ = GraphFamily::custom;
  std::optional<CoconutShape> coconut_;
};

inline Graph build_coconut_tree(std::size_t p, std::size_t s) {
  if (p == 0) throw GraphError("coconut tree needs p >= 1");
  if (s == 0) throw GraphError("coconut tree needs s >= 1");
  CoconutShape shape{p, s};
  std::vector<Graph::Edge> edges;
  for (std::size_t k = 1; k < p; ++k) edges.emplace_back(shape.path_index(k), shape.path_index(k + 1));
  for (std::size_t j = 1; j <= s; ++j) edges.emplace_back(shape.center(), shape.leaf_index(j));
  return Graph(p + s, edges, GraphFamily::coconut_tree, shape);
}

inline Graph build_star(std::size_t s) { return build_coconut_tree(1, s); }

inline Graph build_path(std::size_t n) {
  if (n == 0) throw GraphError("path needs at least one vertex");
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges, GraphFamily::path, std::nullopt);
}

inline Graph build_cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices to stay simple");
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges, GraphFamily::cycle, std::nullopt);
}

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

}  // namespace arith
