#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "sbvs/error.hpp"
#include "sbvs/generators.hpp"
#include "sbvs/graph.hpp"

// Canonical labeling for small graphs (n <= 32) and the isomorphism-class
// catalogs built on it. Used to turn labeled streams into one representative
// per class for exhaustive sweeps.

namespace sbvs {

/// Adjacency rows under the canonical relabeling; equal codes iff isomorphic.
using CanonicalCode = std::vector<std::uint32_t>;

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    if (n_ > 32) throw capacity_error("canonical_form supports at most 32 vertices");
    for (const auto& e : g.edges()) {
      adj_[e.u] |= std::uint32_t{1} << e.v;
      adj_[e.v] |= std::uint32_t{1} << e.u;
    }
  }

  CanonicalCode run() {
    std::vector<int> colors(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) colors[v] = std::popcount(adj_[v]);
    colors = refine(rank(colors));
    search(colors);
    return best_;
  }

  std::vector<Vertex> labeling() const { return best_labels_; }

 private:
  // Dense ranks of arbitrary keys, ordered by key value.
  template <typename Key>
  static std::vector<int> rank_keys(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return out;
  }
  static std::vector<int> rank(const std::vector<int>& colors) { return rank_keys(colors); }

  static int count_colors(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  // Colour refinement: split cells by the multiset of neighbour colours until stable.
  std::vector<int> refine(std::vector<int> colors) const {
    int count = count_colors(colors);
    while (true) {
      std::vector<std::vector<int>> keys(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        keys[v].push_back(colors[v]);
        std::vector<int> around;
        for (auto w = adj_[v]; w != 0; w &= w - 1) around.push_back(colors[std::countr_zero(w)]);
        std::sort(around.begin(), around.end());
        keys[v].insert(keys[v].end(), around.begin(), around.end());
      }
      auto next = rank_keys(keys);
      const int next_count = count_colors(next);
      if (next_count == count) return next;
      colors = std::move(next);
      count = next_count;
    }
  }

  // Union-find root of v under the stored automorphisms that fix every
  // individualized vertex on the current path.
  std::vector<Vertex> stabilizer_orbits() const {
    std::vector<Vertex> parent(n_);
    for (std::size_t v = 0; v < n_; ++v) parent[v] = static_cast<Vertex>(v);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(path_.begin(), path_.end(), [&](Vertex v) { return gamma[v] == v; })) continue;
      for (std::size_t v = 0; v < n_; ++v) {
        const auto a = find(static_cast<Vertex>(v)), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<Vertex>(v));
    return parent;
  }

  void search(const std::vector<int>& colors) {
    const int count = count_colors(colors);
    if (static_cast<std::size_t>(count) == n_) {
      leaf(colors);
      return;
    }
    // Target: the first colour class with more than one member.
    std::vector<int> sizes(count, 0);
    for (auto c : colors) ++sizes[c];
    int target = 0;
    while (sizes[target] == 1) ++target;
    std::vector<Vertex> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      // Children in one orbit of the path stabilizer give identical subtrees.
      if (!tried.empty()) {
        const auto orbit = stabilizer_orbits();
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbit[t] == orbit[v]; })) continue;
      }
      tried.push_back(static_cast<Vertex>(v));
      std::vector<std::pair<int, int>> keys(n_);
      for (std::size_t w = 0; w < n_; ++w) keys[w] = {colors[w], w == v ? 0 : 1};
      path_.push_back(static_cast<Vertex>(v));
      search(refine(rank_keys(keys)));
      path_.pop_back();
    }
  }

  void leaf(const std::vector<int>& labels) {
    CanonicalCode code(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint32_t row = 0;
      for (auto w = adj_[v]; w != 0; w &= w - 1) row |= std::uint32_t{1} << labels[std::countr_zero(w)];
      code[labels[v]] = row;
    }
    if (best_.empty() || code < best_) {
      best_ = std::move(code);
      best_labels_.assign(labels.begin(), labels.end());
      return;
    }
    if (code == best_) {
      // Same code: mapping each vertex to the best leaf's vertex with the same label is an automorphism.
      std::vector<Vertex> by_label(n_);
      for (std::size_t u = 0; u < n_; ++u) by_label[best_labels_[u]] = static_cast<Vertex>(u);
      std::vector<Vertex> gamma(n_);
      bool identity = true;
      for (std::size_t v = 0; v < n_; ++v) {
        gamma[v] = by_label[labels[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> adj_;
  CanonicalCode best_;
  std::vector<Vertex> best_labels_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

inline Graph graph_from_code(const CanonicalCode& code) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < code.size(); ++v)
    for (auto w = code[v]; w != 0; w &= w - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(w));
      if (v < u) edges.emplace_back(v, u);
    }
  return build_graph(code.size(), edges);
}

}  // namespace detail

inline CanonicalCode canonical_form(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::CanonicalSearch(g).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

/// The canonically relabeled copy of g.
inline Graph canonical_graph(const Graph& g) { return detail::graph_from_code(canonical_form(g)); }

/// One representative of every connected graph on exactly n vertices, in
/// canonical-code order. Built by adding a vertex to each connected graph on
/// n-1 vertices; every connected graph has a vertex whose removal keeps it
/// connected, so nothing is missed.
inline std::vector<Graph> connected_graph_catalog(std::size_t n) {
  if (n > 10) throw capacity_error("connected_graph_catalog: n must be at most 10");
  if (n == 0) return {};
  std::map<CanonicalCode, Graph> level;
  level.emplace(canonical_form(build_graph(1, {})), build_graph(1, {}));
  for (std::size_t size = 1; size < n; ++size) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, base] : level) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (const auto& e : base.edges()) edges.emplace_back(e.u, e.v);
      const std::uint32_t subsets = std::uint32_t{1} << size;
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        auto grown = edges;
        for (Vertex v = 0; v < size; ++v) {
          if (mask >> v & 1U) grown.emplace_back(v, static_cast<Vertex>(size));
        }
        auto g = build_graph(size + 1, grown);
        auto c = canonical_form(g);
        if (!next.contains(c)) next.emplace(c, detail::graph_from_code(c));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

/// One representative per isomorphism class of connected cubic graphs on n
/// vertices, in canonical-code order.
inline std::vector<Graph> cubic_classes(std::size_t n, std::size_t cap = 10) {
  std::map<CanonicalCode, Graph> classes;
  CubicEnumerationOptions options;
  options.cap = cap;
  options.fix_root_neighbors = true;
  enumerate_cubic(
      n,
      [&](const Graph& g) {
        auto c = canonical_form(g);
        if (!classes.contains(c)) classes.emplace(c, detail::graph_from_code(c));
        return true;
      },
      options);
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace sbvs
