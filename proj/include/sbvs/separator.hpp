#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sbvs/error.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/rational.hpp"
#include "sbvs/vertex_set.hpp"

namespace sbvs {

/// A two-sided separator certificate (I, V1, V2). When removing I leaves more
/// than two components, the grouping of components into sides is part of the
/// certificate and is never recomputed.
struct SeparatorPartition {
  VertexSet separator;
  VertexSet side1;
  VertexSet side2;

  friend bool operator==(const SeparatorPartition&, const SeparatorPartition&) = default;
};

inline SeparatorPartition make_partition(std::size_t n, std::initializer_list<Vertex> separator,
                                         std::initializer_list<Vertex> side1, std::initializer_list<Vertex> side2) {
  return {VertexSet(n, separator), VertexSet(n, side1), VertexSet(n, side2)};
}

enum class Violation {
  universe_mismatch,
  overlapping_sets,
  uncovered_vertex,
  empty_side,
  sides_connected,
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::universe_mismatch: return "universe mismatch";
    case Violation::overlapping_sets: return "overlapping sets";
    case Violation::uncovered_vertex: return "uncovered vertex";
    case Violation::empty_side: return "empty side";
    case Violation::sides_connected: return "sides connected";
  }
  return "unknown";
}

struct ViolationReport {
  Violation kind;
  std::string detail;
};

/// Every violated partition invariant; empty when the certificate is valid.
inline std::vector<ViolationReport> validate_partition(const Graph& g, const SeparatorPartition& p) {
  std::vector<ViolationReport> out;
  const auto n = g.order();
  if (p.separator.universe() != n || p.side1.universe() != n || p.side2.universe() != n) {
    out.push_back({Violation::universe_mismatch, "partition sets are not over " + std::to_string(n) + " vertices"});
    return out;
  }
  if (p.separator.intersects(p.side1) || p.separator.intersects(p.side2) || p.side1.intersects(p.side2)) {
    out.push_back({Violation::overlapping_sets, "I, V1 and V2 are not pairwise disjoint"});
  }
  const auto covered = p.separator | p.side1 | p.side2;
  if (covered.size() != n) {
    out.push_back({Violation::uncovered_vertex,
                   "vertex " + std::to_string(covered.complement().first()) + " is in none of I, V1, V2"});
  }
  if (p.side1.empty()) out.push_back({Violation::empty_side, "V1 is empty"});
  if (p.side2.empty()) out.push_back({Violation::empty_side, "V2 is empty"});
  for (const auto& e : g.edges()) {
    if ((p.side1.contains(e.u) && p.side2.contains(e.v)) || (p.side2.contains(e.u) && p.side1.contains(e.v))) {
      out.push_back({Violation::sides_connected,
                     "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins V1 and V2"});
      break;
    }
  }
  return out;
}

inline bool is_valid_partition(const Graph& g, const SeparatorPartition& p) { return validate_partition(g, p).empty(); }

inline void require_valid(const Graph& g, const SeparatorPartition& p) {
  const auto violations = validate_partition(g, p);
  if (!violations.empty()) {
    throw Error(ErrorKind::invalid_partition, std::string(to_string(violations.front().kind)) + ": " +
                                                  violations.front().detail);
  }
}

/// Per-side boundary counts. Side index 0 is V1, 1 is V2.
struct BoundaryStats {
  std::int64_t side_size[2] = {0, 0};
  std::int64_t internal_edges[2] = {0, 0};   // E_i
  std::int64_t separator_edges[2] = {0, 0};  // E_i^I
  std::int64_t boundary[2] = {0, 0};         // beta_i
  std::int64_t separator_size = 0;
  std::int64_t separator_internal_edges = 0;
};

inline BoundaryStats boundary_stats(const Graph& g, const SeparatorPartition& p) {
  require_valid(g, p);
  BoundaryStats s;
  s.separator_size = static_cast<std::int64_t>(p.separator.size());
  const VertexSet* sides[2] = {&p.side1, &p.side2};
  for (int i = 0; i < 2; ++i) {
    s.side_size[i] = static_cast<std::int64_t>(sides[i]->size());
    sides[i]->for_each([&](Vertex v) {
      bool touches = false;
      for (auto w : g.neighbors(v)) {
        if (p.separator.contains(w)) {
          ++s.separator_edges[i];
          touches = true;
        } else if (w > v && sides[i]->contains(w)) {
          ++s.internal_edges[i];
        }
      }
      if (touches) ++s.boundary[i];
    });
  }
  s.separator_internal_edges = static_cast<std::int64_t>(internal_edge_count(g, p.separator));
  return s;
}

enum class NiceClause {
  separator_not_independent,   // (a)
  shared_separator_neighbor,   // (b) a vertex outside I has two or more neighbours in I
  separator_misses_side,       // (c) a separator vertex lacks a neighbour in V1 or in V2
};

inline const char* to_string(NiceClause c) {
  switch (c) {
    case NiceClause::separator_not_independent: return "separator not independent";
    case NiceClause::shared_separator_neighbor: return "vertex with two or more separator neighbours";
    case NiceClause::separator_misses_side: return "separator vertex missing a side";
  }
  return "unknown";
}

struct NiceResult {
  bool nice = true;
  std::vector<NiceClause> failed;
};

inline NiceResult is_nice(const Graph& g, const SeparatorPartition& p) {
  require_valid(g, p);
  NiceResult r;
  auto fail = [&](NiceClause c) {
    r.nice = false;
    r.failed.push_back(c);
  };
  if (!is_independent(g, p.separator)) fail(NiceClause::separator_not_independent);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p.separator.contains(v)) continue;
    const auto hits = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                    [&](Vertex w) { return p.separator.contains(w); });
    if (hits >= 2) {
      fail(NiceClause::shared_separator_neighbor);
      break;
    }
  }
  bool every_touches_both = true;
  p.separator.for_each([&](Vertex v) {
    bool one = false, two = false;
    for (auto w : g.neighbors(v)) {
      one = one || p.side1.contains(w);
      two = two || p.side2.contains(w);
    }
    every_touches_both = every_touches_both && one && two;
  });
  if (!every_touches_both) fail(NiceClause::separator_misses_side);
  return r;
}

inline void require_cubic(const Graph& g, const char* what) {
  if (!is_k_regular(g, 3)) throw precondition_error(std::string(what) + " requires a 3-regular graph");
}

/// 3|V_i| - (2 E_i + E_i^I) per side. Zero on both sides for any valid
/// partition of a cubic graph.
struct Lemma1Residuals {
  std::int64_t side[2] = {0, 0};
  bool holds() const { return side[0] == 0 && side[1] == 0; }
};

inline Lemma1Residuals lemma1_check(const Graph& g, const SeparatorPartition& p) {
  require_cubic(g, "lemma1_check");
  const auto s = boundary_stats(g, p);
  Lemma1Residuals r;
  for (int i = 0; i < 2; ++i) r.side[i] = 3 * s.side_size[i] - (2 * s.internal_edges[i] + s.separator_edges[i]);
  return r;
}

struct Lemma2Result {
  std::int64_t identity_residual = 0;  // beta_1 + beta_2 - 3|I|
  bool bounds_hold[2] = {false, false};  // |I| <= beta_i <= 2|I|
  bool holds() const { return identity_residual == 0 && bounds_hold[0] && bounds_hold[1]; }
};

/// Requires a cubic graph and a nice partition; the error names the missing
/// niceness clause.
inline Lemma2Result lemma2_check(const Graph& g, const SeparatorPartition& p) {
  require_cubic(g, "lemma2_check");
  const auto nice = is_nice(g, p);
  if (!nice.nice) throw precondition_error(std::string("lemma2_check: ") + to_string(nice.failed.front()));
  const auto s = boundary_stats(g, p);
  Lemma2Result r;
  r.identity_residual = s.boundary[0] + s.boundary[1] - 3 * s.separator_size;
  for (int i = 0; i < 2; ++i) {
    r.bounds_hold[i] = s.separator_size <= s.boundary[i] && s.boundary[i] <= 2 * s.separator_size;
  }
  return r;
}

/// Outcome of a balance predicate, with both sides of the inequality already
/// multiplied through by alpha's denominator.
struct BalanceCheck {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

inline void require_alpha(const Rational& alpha) {
  if (!alpha.in_open_balance_range()) {
    throw precondition_error("alpha " + alpha.str() + " outside the open interval (1/2, 1)");
  }
}

/// max(|V1|, |V2|) <= alpha |V|.
inline BalanceCheck vertex_balance(const Graph& g, const SeparatorPartition& p, const Rational& alpha) {
  require_alpha(alpha);
  require_valid(g, p);
  const auto largest = static_cast<std::int64_t>(std::max(p.side1.size(), p.side2.size()));
  BalanceCheck c;
  c.lhs = alpha.den * largest;
  c.rhs = alpha.num * static_cast<std::int64_t>(g.order());
  c.holds = c.lhs <= c.rhs;
  return c;
}

/// Side weight |V_i| + E_i + E_i^I.
inline std::int64_t side_weight(const BoundaryStats& s, int side) {
  return s.side_size[side] + s.internal_edges[side] + s.separator_edges[side];
}

/// max_i(|V_i| + E_i + E_i^I) + |I| <= alpha (|V| + |E|), I independent.
inline BalanceCheck subgraph_balance(const Graph& g, const SeparatorPartition& p, const Rational& alpha) {
  require_alpha(alpha);
  require_valid(g, p);
  if (!is_independent(g, p.separator)) {
    throw Error(ErrorKind::constraint_violation, "subgraph balance requires an independent separator");
  }
  const auto s = boundary_stats(g, p);
  BalanceCheck c;
  c.lhs = alpha.den * (std::max(side_weight(s, 0), side_weight(s, 1)) + s.separator_size);
  c.rhs = alpha.num * static_cast<std::int64_t>(g.order() + g.size());
  c.holds = c.lhs <= c.rhs;
  return c;
}

/// Visits every valid two-sided partition with |I| <= max_separator. Each
/// unordered split appears once, with the component holding the smallest
/// non-separator vertex in V1. Return false from `visit` to stop.
inline void for_each_partition(const Graph& g, std::size_t max_separator,
                               const std::function<bool(const SeparatorPartition&)>& visit) {
  const auto n = g.order();
  std::vector<Vertex> chosen;
  std::function<bool(Vertex)> grow = [&](Vertex next) -> bool {
    if (!chosen.empty()) {
      VertexSet removed(n, chosen);
      const auto components = connected_components(g, removed);
      if (components.size() >= 2) {
        const std::size_t rest = components.size() - 1;
        if (rest >= 63) throw capacity_error("for_each_partition: too many components to split");
        // bit j of mask puts component j+1 into V1; component 0 is always in V1
        for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest); ++mask) {
          SeparatorPartition p{removed, components[0], VertexSet(n)};
          for (std::size_t j = 0; j < rest; ++j) {
            if (mask >> j & 1U) {
              p.side1 |= components[j + 1];
            } else {
              p.side2 |= components[j + 1];
            }
          }
          if (!visit(p)) return false;
        }
      }
    }
    if (chosen.size() == max_separator) return true;
    for (Vertex v = next; v < n; ++v) {
      chosen.push_back(v);
      const bool keep_going = grow(v + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  grow(0);
}

}  // namespace sbvs
