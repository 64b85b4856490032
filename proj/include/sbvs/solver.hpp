#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbvs/error.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/rational.hpp"
#include "sbvs/separator.hpp"

namespace sbvs {

enum class Problem { vertex_balanced, subgraph_balanced };

inline const char* to_string(Problem p) {
  return p == Problem::vertex_balanced ? "vertex_balanced" : "subgraph_balanced";
}

struct SolverConfig {
  Problem problem = Problem::subgraph_balanced;
  Rational alpha{2, 3};
  std::optional<std::size_t> max_separator;
  /// Also demand clauses (b) and (c) of niceness: no outside vertex with two
  /// separator neighbours, every separator vertex touching both sides.
  bool require_nice = false;
  /// Reject inputs with a vertex of degree above 3. Off by default: both
  /// problems are defined on arbitrary graphs.
  bool require_max_degree_3 = false;
  std::optional<std::chrono::milliseconds> time_budget;

  void validate() const {
    require_alpha(alpha);
    if (max_separator && *max_separator == 0) throw precondition_error("max_separator must be positive");
    if (time_budget && time_budget->count() <= 0) throw precondition_error("time_budget must be positive");
  }

  void validate(const Graph& g) const {
    validate();
    if (!is_connected(g)) throw precondition_error("solver: input graph is disconnected");
    if (require_max_degree_3 && g.max_degree() > 3) {
      throw precondition_error("solver: max degree " + std::to_string(g.max_degree()) + " exceeds 3");
    }
  }

  bool requires_independence() const { return problem == Problem::subgraph_balanced || require_nice; }
};

enum class SolveStatus { optimal, infeasible, budget_exhausted };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<SeparatorPartition> partition;
  std::size_t separator_size = 0;
  std::uint64_t nodes_explored = 0;
};

struct CertificateResult {
  bool valid = true;
  std::vector<std::string> reasons;
};

/// Polynomial-time check of a certificate against the configured problem:
/// validity, independence when required, niceness when required, the size cap
/// and the balance constraint. Never searches.
inline CertificateResult verify_certificate(const Graph& g, const SeparatorPartition& p, const SolverConfig& cfg) {
  CertificateResult r;
  auto fail = [&](std::string reason) {
    r.valid = false;
    r.reasons.push_back(std::move(reason));
  };
  if (!cfg.alpha.in_open_balance_range()) {
    fail("alpha " + cfg.alpha.str() + " outside (1/2, 1)");
    return r;
  }
  const auto violations = validate_partition(g, p);
  for (const auto& v : violations) fail(std::string(to_string(v.kind)) + ": " + v.detail);
  if (!violations.empty()) return r;
  const bool independent = is_independent(g, p.separator);
  if (cfg.requires_independence() && !independent) fail("separator not independent");
  if (cfg.require_nice) {
    for (auto clause : is_nice(g, p).failed) {
      if (clause != NiceClause::separator_not_independent) fail(std::string("not nice: ") + to_string(clause));
    }
  }
  if (cfg.max_separator && p.separator.size() > *cfg.max_separator) {
    fail("separator size " + std::to_string(p.separator.size()) + " exceeds cap " + std::to_string(*cfg.max_separator));
  }
  if (cfg.problem == Problem::vertex_balanced) {
    const auto c = vertex_balance(g, p, cfg.alpha);
    if (!c.holds) fail("vertex balance violated: " + std::to_string(c.lhs) + " > " + std::to_string(c.rhs));
  } else if (independent) {
    const auto c = subgraph_balance(g, p, cfg.alpha);
    if (!c.holds) fail("subgraph balance violated: " + std::to_string(c.lhs) + " > " + std::to_string(c.rhs));
  }
  return r;
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline VertexSet to_vertex_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

// Lexicographic comparison of the ascending member lists of two masks.
inline bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask low = (a ^ b) & (~(a ^ b) + 1);
  const Mask above = ~((low << 1) - 1);
  // The list holding the first differing element is smaller, unless the other
  // list has already run out at that point.
  if ((a & low) != 0) return (b & above) != 0;
  return (a & above) == 0;
}

class SeparatorSearch {
 public:
  SeparatorSearch(const Graph& g, const SolverConfig& cfg)
      : g_(g), cfg_(cfg), n_(g.order()), adj_(adjacency_masks(g)), all_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1) {
    if (cfg_.time_budget) deadline_ = std::chrono::steady_clock::now() + *cfg_.time_budget;
  }

  SolveOutcome run() {
    SolveOutcome out;
    std::size_t limit = n_ >= 2 ? n_ - 2 : 0;
    if (cfg_.max_separator) limit = std::min(limit, *cfg_.max_separator);
    for (std::size_t k = 1; k <= limit; ++k) {
      size_ = k;
      if (!choose(0, 0, 0)) {
        out.status = SolveStatus::budget_exhausted;
        break;
      }
      if (found_) {
        out.status = SolveStatus::optimal;
        out.separator_size = k;
        out.partition = SeparatorPartition{to_vertex_set(best_separator_, n_), to_vertex_set(best_side1_, n_),
                                           to_vertex_set(all_ & ~best_separator_ & ~best_side1_, n_)};
        break;
      }
    }
    out.nodes_explored = nodes_;
    return out;
  }

 private:
  // Candidate separators of the current size in lexicographic order; subtrees
  // that already break independence are cut when independence is required.
  // Returns false when the time budget runs out.
  bool choose(Vertex next, std::size_t depth, Mask chosen) {
    if (found_) return true;
    if (depth == size_) return evaluate(chosen);
    for (Vertex v = next; v + (size_ - depth) <= n_; ++v) {
      if (cfg_.requires_independence() && (adj_[v] & chosen) != 0) continue;
      if (!choose(v + 1, depth + 1, chosen | (Mask{1} << v))) return false;
      if (found_) return true;
    }
    return true;
  }

  bool out_of_time() {
    return deadline_ && (nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > *deadline_;
  }

  std::int64_t weight(Mask side, Mask separator) const {
    std::int64_t vertices = std::popcount(side), internal = 0, to_separator = 0;
    for (Mask m = side; m != 0; m &= m - 1) {
      const auto v = std::countr_zero(m);
      internal += std::popcount(adj_[v] & side);
      to_separator += std::popcount(adj_[v] & separator);
    }
    if (cfg_.problem == Problem::vertex_balanced) return vertices;
    return vertices + internal / 2 + to_separator;
  }

  bool side_fits(std::int64_t side_weight, std::int64_t separator_size) const {
    if (cfg_.problem == Problem::vertex_balanced) {
      return cfg_.alpha.den * side_weight <= cfg_.alpha.num * static_cast<std::int64_t>(n_);
    }
    return cfg_.alpha.den * (side_weight + separator_size) <=
           cfg_.alpha.num * static_cast<std::int64_t>(n_ + g_.size());
  }

  bool evaluate(Mask separator) {
    ++nodes_;
    if (out_of_time()) return false;
    if (cfg_.require_nice) {
      for (Vertex v = 0; v < n_; ++v) {
        if ((separator >> v & 1U) == 0 && std::popcount(adj_[v] & separator) >= 2) return true;
      }
    }
    const Mask rest = all_ & ~separator;
    std::vector<Mask> components;
    for (Mask left = rest; left != 0;) {
      Mask comp = left & (~left + 1), frontier = comp;
      while (frontier != 0) {
        Mask grown = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grown |= adj_[std::countr_zero(f)];
        frontier = grown & rest & ~comp;
        comp |= frontier;
      }
      components.push_back(comp);
      left &= ~comp;
    }
    if (components.size() < 2) return true;
    const auto k = static_cast<std::int64_t>(size_);
    std::vector<std::int64_t> weights;
    for (auto c : components) {
      weights.push_back(weight(c, separator));
      if (!side_fits(weights.back(), k)) return true;  // a component cannot be split across sides
    }
    // Component 0 holds the smallest free vertex, so the lexicographically
    // smallest V1 always contains it.
    const std::size_t rest_count = components.size() - 1;
    if (rest_count >= 63) throw capacity_error("solver: too many components");
    std::optional<Mask> best;
    for (Mask pick = 0; pick + 1 < (Mask{1} << rest_count); ++pick) {
      ++nodes_;
      Mask side1 = components[0];
      std::int64_t w1 = weights[0], w2 = 0;
      for (std::size_t j = 0; j < rest_count; ++j) {
        if (pick >> j & 1U) {
          side1 |= components[j + 1];
          w1 += weights[j + 1];
        } else {
          w2 += weights[j + 1];
        }
      }
      if (!side_fits(w1, k) || !side_fits(w2, k)) continue;
      if (cfg_.require_nice && !touches_both(separator, side1, rest & ~side1)) continue;
      if (!best || mask_lex_less(side1, *best)) best = side1;
    }
    if (best) {
      found_ = true;
      best_separator_ = separator;
      best_side1_ = *best;
    }
    return true;
  }

  bool touches_both(Mask separator, Mask side1, Mask side2) const {
    for (Mask m = separator; m != 0; m &= m - 1) {
      const auto v = std::countr_zero(m);
      if ((adj_[v] & side1) == 0 || (adj_[v] & side2) == 0) return false;
    }
    return true;
  }

  const Graph& g_;
  const SolverConfig& cfg_;
  std::size_t n_;
  std::vector<Mask> adj_;
  Mask all_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t size_ = 0;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  Mask best_separator_ = 0;
  Mask best_side1_ = 0;
};

}  // namespace detail

/// Minimum separator under the configured balance constraint.
///
/// Iterative deepening on |I|: candidate separators of each size are visited in
/// lexicographic order and the components left behind are grouped into two
/// sides by subset search. A component too heavy for either side prunes the
/// candidate. Ties resolve to the lexicographically smallest I, then the
/// lexicographically smallest V1. Rejects disconnected graphs and graphs with
/// more than 64 vertices.
inline SolveOutcome solve_min_separator(const Graph& g, const SolverConfig& cfg) {
  cfg.validate(g);
  if (g.order() > 64) throw capacity_error("solver: exact search supports at most 64 vertices");
  return detail::SeparatorSearch(g, cfg).run();
}

enum class Decision { yes, no, unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "YES";
    case Decision::no: return "NO";
    case Decision::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

/// YES iff some partition satisfying the configured constraints has |I| <= k.
/// UNKNOWN only when the time budget runs out first.
inline Decision decide(const Graph& g, const SolverConfig& cfg, std::size_t k) {
  if (k == 0) {
    cfg.validate(g);
    return Decision::no;
  }
  auto bounded = cfg;
  bounded.max_separator = cfg.max_separator ? std::min(*cfg.max_separator, k) : k;
  const auto outcome = solve_min_separator(g, bounded);
  switch (outcome.status) {
    case SolveStatus::optimal: return Decision::yes;
    case SolveStatus::infeasible: return Decision::no;
    case SolveStatus::budget_exhausted: return Decision::unknown;
  }
  return Decision::unknown;
}

/// Exhaustive reference: every separator I and every V1 within V \ I, checked
/// from first principles. Authoritative but exponential (3^n); refuses n above
/// `cap`.
inline SolveOutcome brute_force_oracle(const Graph& g, const SolverConfig& cfg, std::size_t cap = 14) {
  cfg.validate();
  const auto n = g.order();
  if (cap > 24) throw precondition_error("brute_force_oracle: cap above 24 is not supported");
  if (n > cap) throw capacity_error("brute_force_oracle: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  cfg.validate(g);
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  auto members = [](std::uint32_t m) {
    std::vector<Vertex> out;
    for (Vertex v = 0; m != 0; ++v, m >>= 1)
      if (m & 1U) out.push_back(v);
    return out;
  };
  auto edges_within = [&](std::uint32_t a) {
    std::int64_t twice = 0;
    for (Vertex v = 0; v < n; ++v)
      if (a >> v & 1U) twice += std::popcount(adj[v] & a);
    return twice / 2;
  };
  auto edges_between = [&](std::uint32_t a, std::uint32_t b) {
    std::int64_t count = 0;
    for (Vertex v = 0; v < n; ++v)
      if (a >> v & 1U) count += std::popcount(adj[v] & b);
    return count;
  };
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  const auto V = static_cast<std::int64_t>(n), E = static_cast<std::int64_t>(g.size());

  SolveOutcome out;
  std::optional<std::size_t> best_size;
  std::vector<Vertex> best_i, best_v1;
  std::uint32_t best_i_mask = 0, best_v1_mask = 0;
  for (std::uint64_t raw = 0; raw <= all; ++raw) {
    const auto sep = static_cast<std::uint32_t>(raw);
    const auto size = static_cast<std::size_t>(std::popcount(sep));
    if (cfg.max_separator && size > *cfg.max_separator) continue;
    if (best_size && size > *best_size) continue;
    if (cfg.requires_independence() && edges_within(sep) != 0) continue;
    if (cfg.require_nice) {
      bool shared = false;
      for (Vertex v = 0; v < n; ++v)
        if ((sep >> v & 1U) == 0 && std::popcount(adj[v] & sep) >= 2) shared = true;
      if (shared) continue;
    }
    const std::uint32_t rest = all & ~sep;
    for (std::uint32_t v1 = rest; v1 != 0; v1 = (v1 - 1) & rest) {
      ++out.nodes_explored;
      const std::uint32_t v2 = rest & ~v1;
      if (v2 == 0 || edges_between(v1, v2) != 0) continue;
      bool balanced = false;
      const std::int64_t s1 = std::popcount(v1), s2 = std::popcount(v2), s = std::popcount(sep);
      if (cfg.problem == Problem::vertex_balanced) {
        balanced = cfg.alpha.den * std::max(s1, s2) <= cfg.alpha.num * V;
      } else {
        const auto w1 = s1 + edges_within(v1) + edges_between(v1, sep);
        const auto w2 = s2 + edges_within(v2) + edges_between(v2, sep);
        balanced = cfg.alpha.den * (std::max(w1, w2) + s) <= cfg.alpha.num * (V + E);
      }
      if (!balanced) continue;
      if (cfg.require_nice) {
        bool both = true;
        for (Vertex v = 0; v < n; ++v)
          if ((sep >> v & 1U) && ((adj[v] & v1) == 0 || (adj[v] & v2) == 0)) both = false;
        if (!both) continue;
      }
      const auto mi = members(sep), m1 = members(v1);
      const bool better = !best_size || size < *best_size || (size == *best_size && (mi < best_i || (mi == best_i && m1 < best_v1)));
      if (better) {
        best_size = size;
        best_i = mi;
        best_v1 = m1;
        best_i_mask = sep;
        best_v1_mask = v1;
      }
    }
  }
  if (best_size) {
    out.status = SolveStatus::optimal;
    out.separator_size = *best_size;
    out.partition = SeparatorPartition{detail::to_vertex_set(best_i_mask, n), detail::to_vertex_set(best_v1_mask, n),
                                       detail::to_vertex_set(all & ~best_i_mask & ~best_v1_mask, n)};
  }
  return out;
}

inline nlohmann::json to_json(const SolveOutcome& outcome) {
  nlohmann::json j;
  j["status"] = to_string(outcome.status);
  if (outcome.partition) {
    j["separator"] = outcome.partition->separator.members();
    j["side1"] = outcome.partition->side1.members();
    j["side2"] = outcome.partition->side2.members();
  } else {
    j["separator"] = nullptr;
    j["side1"] = nullptr;
    j["side2"] = nullptr;
  }
  j["size"] = outcome.separator_size;
  j["nodes_explored"] = outcome.nodes_explored;
  return j;
}

}  // namespace sbvs
