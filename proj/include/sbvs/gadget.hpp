#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbvs/error.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/separator.hpp"

// Local-replacement gadget: `cycles` concentric rings of `cycle_len` vertices.
// Ring r position j is vertex r*cycle_len + j; ring 0 is innermost. A spoke
// joins rings r and r+1 at position j iff j = r (mod 2), so every vertex has at
// most one spoke and interior rings have degree exactly 3. Outlets sit on
// non-spoked positions of the outermost ring.

namespace sbvs {

struct GadgetSpec {
  std::size_t cycles = 2;
  std::size_t cycle_len = 4;
  std::size_t outlets = 1;
  bool three_regular = false;
  /// Install every original edge twice, on distinct outlet pairs.
  bool doubled = false;

  /// Dimensions for an n-vertex original graph: 4n^2 rings of 4n^2 vertices, n^2 outlets.
  static GadgetSpec paper_scale(std::size_t n) { return {4 * n * n, 4 * n * n, n * n, false, false}; }

  std::size_t order() const { return cycles * cycle_len; }

  void validate() const {
    if (cycle_len % 2 != 0) throw precondition_error("gadget: cycle length s=" + std::to_string(cycle_len) + " is odd");
    if (cycle_len < 4) throw precondition_error("gadget: cycle length must be at least 4");
    if (cycles < 2) throw precondition_error("gadget: need at least 2 cycles");
    if (outlets < 1 || outlets > cycle_len / 2) {
      throw precondition_error("gadget: outlet count t=" + std::to_string(outlets) + " must lie in [1, s/2]");
    }
    if (three_regular && cycle_len % 4 != 0) {
      throw precondition_error("gadget: three_regular needs s divisible by 4 for antipodal inner chords");
    }
  }

  friend bool operator==(const GadgetSpec&, const GadgetSpec&) = default;
};

struct GadgetInstance {
  GadgetSpec spec;
  Graph graph;
  /// Outlet k is vertex outlet_ids[k]; ids ascend with k.
  std::vector<Vertex> outlet_ids;

  Vertex vertex_at(std::size_t ring, std::size_t position) const {
    return static_cast<Vertex>(ring * spec.cycle_len + position % spec.cycle_len);
  }
  std::size_t ring_of(Vertex v) const { return v / spec.cycle_len; }
  std::size_t position_of(Vertex v) const { return v % spec.cycle_len; }
};

/// Whether ring r position j carries a spoke to ring r+1.
inline bool spoked_outward(std::size_t ring, std::size_t position) { return position % 2 == ring % 2; }

/// Positions of the outermost ring that carry no spoke, ascending.
inline std::vector<std::size_t> outer_free_positions(const GadgetSpec& spec) {
  std::vector<std::size_t> out;
  const auto outer = spec.cycles - 1;
  for (std::size_t j = 0; j < spec.cycle_len; ++j) {
    if (!spoked_outward(outer - 1, j)) out.push_back(j);
  }
  return out;
}

/// Outlet positions: `outlets` evenly spaced picks among the free outer positions.
inline std::vector<std::size_t> outlet_positions(const GadgetSpec& spec) {
  const auto free = outer_free_positions(spec);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < spec.outlets; ++k) out.push_back(free[k * free.size() / spec.outlets]);
  return out;
}

inline GadgetInstance build_gadget(const GadgetSpec& spec) {
  spec.validate();
  GadgetInstance gadget;
  gadget.spec = spec;
  const auto s = spec.cycle_len;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t r = 0; r < spec.cycles; ++r) {
    for (std::size_t j = 0; j < s; ++j) {
      edges.emplace_back(gadget.vertex_at(r, j), gadget.vertex_at(r, j + 1));
      if (r + 1 < spec.cycles && spoked_outward(r, j)) edges.emplace_back(gadget.vertex_at(r, j), gadget.vertex_at(r + 1, j));
    }
  }
  gadget.graph = build_graph(spec.order(), edges);
  for (auto j : outlet_positions(spec)) gadget.outlet_ids.push_back(gadget.vertex_at(spec.cycles - 1, j));
  return gadget;
}

/// Max degree <= 3, outlets have degree 2, outlets pairwise non-adjacent.
inline bool gadget_invariants_hold(const GadgetInstance& gadget) {
  if (gadget.graph.max_degree() > 3) return false;
  for (std::size_t a = 0; a < gadget.outlet_ids.size(); ++a) {
    if (gadget.graph.degree(gadget.outlet_ids[a]) != 2) return false;
    for (std::size_t b = a + 1; b < gadget.outlet_ids.size(); ++b) {
      if (gadget.graph.has_edge(gadget.outlet_ids[a], gadget.outlet_ids[b])) return false;
    }
  }
  return true;
}

struct InstalledEdge {
  Edge original;
  std::vector<Edge> endpoints;  // G* edges carrying it (two when doubled)
};

struct PaddingVertex {
  Vertex vertex = 0;
  Vertex gadget = 0;  // original vertex whose gadget received it
  Edge subdivided;    // outer-ring edge it was inserted into
  Vertex partner = 0;
};

/// Provenance from the original graph to G*.
struct ReductionMap {
  GadgetSpec spec;
  std::size_t original_order = 0;
  std::vector<Vertex> offsets;         // first G* id of each original vertex's gadget
  std::vector<Vertex> outlet_template;  // outlet ids local to one gadget
  std::vector<InstalledEdge> installed;
  std::vector<Vertex> marked;  // ascending
  std::vector<Edge> pairing_edges;
  std::vector<PaddingVertex> padding;
  bool edges_installed = false;
  bool three_regularized = false;

  std::size_t gadget_order() const { return spec.order(); }
  std::size_t total_order() const { return original_order * gadget_order() + padding.size(); }

  Vertex outlet(Vertex original, std::size_t index) const { return offsets.at(original) + outlet_template.at(index); }

  /// Original vertex owning G* vertex x (padding included).
  std::optional<Vertex> gadget_of(Vertex x) const {
    if (x < original_order * gadget_order()) return static_cast<Vertex>(x / gadget_order());
    for (const auto& p : padding) {
      if (p.vertex == x) return p.gadget;
    }
    return std::nullopt;
  }

  bool is_outlet(Vertex x) const {
    if (x >= original_order * gadget_order()) return false;
    const auto local = static_cast<Vertex>(x % gadget_order());
    return std::binary_search(outlet_template.begin(), outlet_template.end(), local);
  }

  bool is_marked(Vertex x) const { return std::binary_search(marked.begin(), marked.end(), x); }
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> as_pairs(const std::set<Edge>& edges) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

inline Edge make_edge(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace detail

/// Pairs off every remaining degree-2 vertex so the graph becomes 3-regular:
/// antipodal chords on the innermost ring, nearest arcs between free
/// non-outlet outer positions, then unmarked outlets in ascending position.
/// A gadget left with an odd vertex gets one padding vertex subdividing the
/// nearest outer-ring edge not touching it.
inline Reduction three_regularize(const Graph& gstar, ReductionMap map) {
  if (!map.edges_installed) throw precondition_error("three_regularize: original edges not installed, marking unknown");
  if (map.three_regularized) throw precondition_error("three_regularize: graph already regularized");
  if (gstar.order() != map.total_order()) throw precondition_error("three_regularize: graph does not match reduction map");
  const auto& spec = map.spec;
  const auto s = spec.cycle_len;
  if (s % 4 != 0) throw precondition_error("three_regularize: cycle length must be divisible by 4");

  std::set<Edge> edges(gstar.edges().begin(), gstar.edges().end());
  std::vector<std::size_t> degree(gstar.order());
  for (Vertex v = 0; v < gstar.order(); ++v) degree[v] = gstar.degree(v);
  Vertex next_id = static_cast<Vertex>(gstar.order());
  auto pair_up = [&](Vertex a, Vertex b) {
    const auto e = detail::make_edge(a, b);
    edges.insert(e);
    map.pairing_edges.push_back(e);
  };

  const auto outer = spec.cycles - 1;
  const auto free = outer_free_positions(spec);
  const auto outlet_pos = outlet_positions(spec);
  for (Vertex original = 0; original < map.original_order; ++original) {
    const Vertex base = map.offsets[original];
    auto at = [&](std::size_t ring, std::size_t pos) { return static_cast<Vertex>(base + ring * s + pos % s); };

    for (std::size_t j = 0; j < s / 2; ++j) {
      if (!spoked_outward(0, j)) pair_up(at(0, j), at(0, j + s / 2));
    }

    std::vector<std::size_t> non_outlets;
    for (auto j : free) {
      if (!std::binary_search(outlet_pos.begin(), outlet_pos.end(), j)) non_outlets.push_back(j);
    }
    std::vector<std::size_t> pool;
    for (std::size_t k = 0; k + 1 < non_outlets.size(); k += 2) pair_up(at(outer, non_outlets[k]), at(outer, non_outlets[k + 1]));
    if (non_outlets.size() % 2 == 1) pool.push_back(non_outlets.back());
    for (auto j : outlet_pos) {
      if (degree[at(outer, j)] == 2) pool.push_back(j);
    }
    std::sort(pool.begin(), pool.end());
    for (std::size_t k = 0; k + 1 < pool.size(); k += 2) pair_up(at(outer, pool[k]), at(outer, pool[k + 1]));
    if (pool.size() % 2 == 0) continue;

    const auto leftover_pos = pool.back();
    const auto is_outlet_pos = [&](std::size_t j) { return std::binary_search(outlet_pos.begin(), outlet_pos.end(), j % s); };
    std::optional<std::size_t> chosen;   // edge (j, j+1) on the outer ring
    std::optional<std::size_t> fallback;
    for (std::size_t d = 1; d + 1 < s && !chosen; ++d) {
      for (std::size_t start : {leftover_pos + d, leftover_pos + s - d - 1}) {
        const auto a = start % s, b = (start + 1) % s;
        if (a == leftover_pos || b == leftover_pos) continue;
        if (!fallback) fallback = a;
        if (!is_outlet_pos(a) && !is_outlet_pos(b)) {
          chosen = a;
          break;
        }
      }
    }
    const auto edge_start = chosen ? *chosen : *fallback;
    const auto a = at(outer, edge_start), b = at(outer, edge_start + 1), x = at(outer, leftover_pos);
    const Vertex pad = next_id++;
    edges.erase(detail::make_edge(a, b));
    edges.insert(detail::make_edge(a, pad));
    edges.insert(detail::make_edge(pad, b));
    pair_up(x, pad);
    map.padding.push_back({pad, original, detail::make_edge(a, b), x});
  }
  map.three_regularized = true;
  return {build_graph(next_id, detail::as_pairs(edges)), std::move(map)};
}

/// Replaces every vertex of g by a gadget and installs each original edge
/// (u, v) between outlet u of gadget(v) and outlet v of gadget(u).
inline Reduction reduce(const Graph& g, const GadgetSpec& spec) {
  spec.validate();
  const auto n = g.order();
  if (spec.outlets < n) {
    throw capacity_error("reduce: t=" + std::to_string(spec.outlets) + " outlets cannot index n=" + std::to_string(n) +
                         " vertices");
  }
  if (spec.doubled && 2 * n > spec.outlets) {
    throw capacity_error("reduce: doubled installation needs t >= 2n, have t=" + std::to_string(spec.outlets));
  }
  const auto gadget = build_gadget(spec);
  ReductionMap map;
  map.spec = spec;
  map.original_order = n;
  map.outlet_template = gadget.outlet_ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    const auto base = static_cast<Vertex>(v * spec.order());
    map.offsets.push_back(base);
    for (const auto& e : gadget.graph.edges()) edges.emplace_back(base + e.u, base + e.v);
  }
  for (const auto& e : g.edges()) {
    InstalledEdge installed{e, {}};
    const std::size_t copies = spec.doubled ? 2 : 1;
    for (std::size_t c = 0; c < copies; ++c) {
      const auto a = map.outlet(e.v, c * n + e.u);
      const auto b = map.outlet(e.u, c * n + e.v);
      edges.emplace_back(a, b);
      installed.endpoints.push_back(detail::make_edge(a, b));
      map.marked.push_back(a);
      map.marked.push_back(b);
    }
    map.installed.push_back(std::move(installed));
  }
  std::sort(map.marked.begin(), map.marked.end());
  map.edges_installed = true;
  Reduction out{build_graph(n * spec.order(), edges), std::move(map)};
  if (spec.three_regular) return three_regularize(out.graph, std::move(out.map));
  return out;
}

struct PullbackReport {
  bool outlet_only = false;
  bool independent = false;
  std::vector<Vertex> split_vertices;          // originals whose gadget meets both sides
  std::vector<std::size_t> separator_per_gadget;
  std::size_t padding_in_separator = 0;
};

/// Describes a separator of G* in terms of the original graph. Makes no claim
/// about answer preservation.
inline PullbackReport separator_pullback(const Graph& gstar, const ReductionMap& map, const SeparatorPartition& p) {
  if (gstar.order() != map.total_order() || p.separator.universe() != gstar.order() ||
      p.side1.universe() != gstar.order() || p.side2.universe() != gstar.order()) {
    throw precondition_error("separator_pullback: dimension mismatch between partition, G* and reduction map");
  }
  require_valid(gstar, p);
  PullbackReport r;
  r.independent = is_independent(gstar, p.separator);
  r.outlet_only = true;
  r.separator_per_gadget.assign(map.original_order, 0);
  p.separator.for_each([&](Vertex x) {
    r.outlet_only = r.outlet_only && map.is_outlet(x);
    if (x >= map.original_order * map.gadget_order()) ++r.padding_in_separator;
    if (auto owner = map.gadget_of(x)) ++r.separator_per_gadget[*owner];
  });
  std::vector<int> seen(map.original_order, 0);
  p.side1.for_each([&](Vertex x) {
    if (auto owner = map.gadget_of(x)) seen[*owner] |= 1;
  });
  p.side2.for_each([&](Vertex x) {
    if (auto owner = map.gadget_of(x)) seen[*owner] |= 2;
  });
  for (Vertex v = 0; v < map.original_order; ++v) {
    if (seen[v] == 3) r.split_vertices.push_back(v);
  }
  return r;
}

inline nlohmann::json to_json(const GadgetSpec& spec) {
  return {{"cycles", spec.cycles},
          {"cycle_len", spec.cycle_len},
          {"outlets", spec.outlets},
          {"three_regular", spec.three_regular},
          {"doubled", spec.doubled}};
}

inline nlohmann::json to_json(const ReductionMap& map) {
  auto edge_json = [](const Edge& e) { return nlohmann::json::array({e.u, e.v}); };
  nlohmann::json installed = nlohmann::json::array();
  for (const auto& ie : map.installed) {
    nlohmann::json carriers = nlohmann::json::array();
    for (const auto& e : ie.endpoints) carriers.push_back(edge_json(e));
    installed.push_back({{"original", edge_json(ie.original)}, {"gstar", carriers}});
  }
  nlohmann::json outlets = nlohmann::json::array();
  for (Vertex v = 0; v < map.original_order; ++v) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < map.outlet_template.size(); ++k) row.push_back(map.outlet(v, k));
    outlets.push_back(row);
  }
  nlohmann::json pairing = nlohmann::json::array();
  for (const auto& e : map.pairing_edges) pairing.push_back(edge_json(e));
  nlohmann::json padding = nlohmann::json::array();
  for (const auto& pv : map.padding) {
    padding.push_back({{"vertex", pv.vertex},
                       {"gadget", pv.gadget},
                       {"subdivided", edge_json(pv.subdivided)},
                       {"partner", pv.partner}});
  }
  return {{"spec", to_json(map.spec)},
          {"original_order", map.original_order},
          {"gadget_order", map.gadget_order()},
          {"total_order", map.total_order()},
          {"offsets", map.offsets},
          {"outlets", outlets},
          {"installed_edges", installed},
          {"marked", map.marked},
          {"pairing_edges", pairing},
          {"padding", padding},
          {"three_regularized", map.three_regularized}};
}

}  // namespace sbvs
