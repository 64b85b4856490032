#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sbvs/error.hpp"
#include "sbvs/vertex_set.hpp"

namespace sbvs {

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted and unique; adjacency lists are sorted ascending, so
/// every traversal is deterministic.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    const auto& row = adjacency_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adjacency_) best = std::max(best, row.size());
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds the canonical graph. Duplicate and reversed pairs collapse; a
/// self-loop or an id >= n is rejected naming the offending pair.
inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    const auto pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a == b) throw precondition_error("self-loop " + pair);
    if (a >= n || b >= n) {
      throw precondition_error("edge " + pair + " references a vertex >= n=" + std::to_string(n));
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list));
}

inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edge_list.size());
  for (const auto& e : edge_list) pairs.emplace_back(e.u, e.v);
  return build_graph(n, pairs);
}

inline std::size_t degree_sum(const Graph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
  return total;
}

/// Maximal connected vertex sets of g minus `removed`, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  const auto n = g.order();
  if (removed.universe() != n) throw precondition_error("removed set is not over the graph's vertices");
  std::vector<VertexSet> components;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start] || removed.contains(start)) continue;
    VertexSet component(n);
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      component.insert(v);
      for (auto w : g.neighbors(v)) {
        if (!seen[w] && !removed.contains(w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.order()));
}

/// A graph with no vertices counts as connected.
inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_k_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

inline bool is_independent(const Graph& g, const VertexSet& vs) {
  bool independent = true;
  vs.for_each([&](Vertex v) {
    for (auto w : g.neighbors(v)) {
      if (vs.contains(w)) independent = false;
    }
  });
  return independent;
}

struct InducedSubgraph {
  Graph graph;
  /// original_id[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original_id;
};

/// Subgraph on `vs` keeping exactly the edges internal to `vs`; vertex order is preserved.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
  if (vs.universe() != g.order()) throw precondition_error("vertex set is not over the graph's vertices");
  InducedSubgraph out;
  out.original_id = vs.members();
  std::vector<Vertex> local(g.order(), 0);
  for (std::size_t i = 0; i < out.original_id.size(); ++i) local[out.original_id[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const auto& e : g.edges()) {
    if (vs.contains(e.u) && vs.contains(e.v)) kept.emplace_back(local[e.u], local[e.v]);
  }
  out.graph = build_graph(out.original_id.size(), kept);
  return out;
}

/// Number of edges with both endpoints in `vs`.
inline std::size_t internal_edge_count(const Graph& g, const VertexSet& vs) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (vs.contains(e.u) && vs.contains(e.v)) ++count;
  }
  return count;
}

}  // namespace sbvs
