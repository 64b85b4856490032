#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbvs/canonical.hpp"
#include "sbvs/error.hpp"
#include "sbvs/generators.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/rational.hpp"
#include "sbvs/separator.hpp"
#include "sbvs/solver.hpp"

// Step-by-step audit of the equivalence between the subgraph balance
// constraint and vertex balance on nice separators of cubic graphs.
//
// Every quantity is cleared to an integer by multiplying through by 10q for
// alpha = p/q, which removes the 5/2, 1/2 and 1/5 factors exactly. After the
// orientation swap, side 2 always carries the larger boundary (beta2 >= beta1).

namespace sbvs {

enum class Relation { le, lt, eq };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::eq: return "==";
  }
  return "?";
}

struct ChainStep {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  Relation relation = Relation::le;
  bool holds = false;
};

inline ChainStep make_step(std::string name, std::int64_t lhs, Relation rel, std::int64_t rhs) {
  bool holds = rel == Relation::le ? lhs <= rhs : rel == Relation::lt ? lhs < rhs : lhs == rhs;
  return {std::move(name), lhs, rhs, rel, holds};
}

struct BalanceReport {
  std::string instance_id;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t I_size = 0;
  std::int64_t V[2] = {0, 0};
  std::int64_t E[2] = {0, 0};
  std::int64_t EI[2] = {0, 0};
  std::int64_t beta[2] = {0, 0};
  bool sides_swapped = false;
  std::int64_t delta_beta = 0;
  Rational alpha{2, 3};

  // Subgraph balance as stated, and rewritten via 3V_i = 2E_i + E_i^I as max_i(4V_i - E_i) + I.
  std::int64_t eq1_lhs = 0;
  std::int64_t eq1_rhs = 0;
  std::int64_t eq1_rewrite_lhs = 0;
  // max_i(5/2 V_i - 1/2 beta_i) + I as printed, and the exact substitution max_i(5/2 V_i + 1/2 beta_i) + I.
  std::int64_t eq2_lhs = 0;
  std::int64_t eq2_rhs = 0;
  std::int64_t eq2_substituted_lhs = 0;
  // (5/2) max(V1 + dbeta/5, V2) - beta2/2 + I, the oriented form of eq2_lhs.
  std::int64_t wlog_lhs = 0;
  std::int64_t vb_lhs = 0;
  std::int64_t vb_rhs = 0;
  // (5/2) max(V1 + dbeta/5, V2) - beta2/2 <= alpha (5/2) V.
  std::int64_t eq3_lhs = 0;
  std::int64_t eq3_rhs = 0;

  bool eq1_holds = false;
  bool vb_holds = false;
  char converse_case = 'A';

  std::vector<bool> forward_chain;
  std::vector<bool> converse_chain;
  bool forward_applicable = false;
  bool converse_applicable = false;
  bool converse_with_I = false;
  bool converse_eq1 = false;

  std::vector<Vertex> separator;
  std::vector<Vertex> side1;
  std::vector<Vertex> side2;
};

struct ChainResult {
  bool applicable = false;
  std::vector<ChainStep> steps;

  bool all_hold() const {
    return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.holds; });
  }
};

inline const std::vector<std::string>& forward_step_names() {
  static const std::vector<std::string> names = {
      "lemma1_rewrite",  "boundary_identity_side1", "boundary_identity_side2", "substitution_side1",
      "substitution_side2", "wlog_identity",        "eq2_printed",            "link1_dbeta_nonnegative",
      "link2_lemma2_bound", "link3_eq2_scaled",      "vertex_balance"};
  return names;
}

inline const std::vector<std::string>& converse_step_names() {
  static const std::vector<std::string> names = {"A_equality",   "A_strict",        "A_vertex_balance", "B_equality",
                                                 "B_alpha_step", "B_max_bound",     "eq3"};
  return names;
}

/// Forward direction: subgraph balance implies vertex balance. Applicable
/// when the report satisfies the subgraph balance constraint.
inline ChainResult check_forward(const BalanceReport& r) {
  const auto q = r.alpha.den, p = r.alpha.num;
  const auto [V1, V2] = std::pair{r.V[0], r.V[1]};
  const auto db = r.delta_beta, b2 = r.beta[1], I = r.I_size;
  ChainResult c;
  c.applicable = r.eq1_holds;
  c.steps.push_back(make_step("lemma1_rewrite", r.eq1_rewrite_lhs, Relation::eq, r.eq1_lhs));
  for (int i = 0; i < 2; ++i) {
    c.steps.push_back(make_step(i == 0 ? "boundary_identity_side1" : "boundary_identity_side2", r.EI[i], Relation::eq,
                                r.beta[i]));
  }
  for (int i = 0; i < 2; ++i) {
    c.steps.push_back(make_step(i == 0 ? "substitution_side1" : "substitution_side2", 2 * r.E[i], Relation::eq,
                                3 * r.V[i] - r.beta[i]));
  }
  const auto printed_max = q * std::max(25 * r.V[0] - 5 * r.beta[0], 25 * r.V[1] - 5 * r.beta[1]) + 10 * q * I;
  c.steps.push_back(make_step("wlog_identity", printed_max, Relation::eq, r.wlog_lhs));
  c.steps.push_back(make_step("eq2_printed", r.eq2_lhs, Relation::le, r.eq2_rhs));
  // Chain at scale 10q: max(V1,V2) <= max(V1+db/5, V2) <= ... + 2I/5 - b2/5 <= alpha V.
  const auto f0 = 10 * q * std::max(V1, V2);
  const auto f1 = q * std::max(10 * V1 + 2 * db, 10 * V2);
  const auto f2 = f1 + 4 * q * I - 2 * q * b2;
  const auto f3 = 10 * p * r.n;
  c.steps.push_back(make_step("link1_dbeta_nonnegative", f0, Relation::le, f1));
  c.steps.push_back(make_step("link2_lemma2_bound", f1, Relation::le, f2));
  c.steps.push_back(make_step("link3_eq2_scaled", f2, Relation::le, f3));
  c.steps.push_back(make_step("vertex_balance", r.vb_lhs, Relation::le, r.vb_rhs));
  return c;
}

/// Converse direction, both case branches exactly as printed, plus the oriented bound.
/// Applicable when the report satisfies vertex balance.
inline ChainResult check_converse(const BalanceReport& r) {
  const auto q = r.alpha.den, p = r.alpha.num;
  const auto V1 = r.V[0], V2 = r.V[1], db = r.delta_beta, b2 = r.beta[1];
  const auto big = std::max(V1, V2);
  const auto oriented = q * std::max(25 * V1 + 5 * db, 25 * V2) - 5 * q * b2;
  ChainResult c;
  c.applicable = r.vb_holds;
  c.steps.push_back(make_step("A_equality", oriented, Relation::eq, 25 * q * big - 5 * q * b2));
  c.steps.push_back(make_step("A_strict", 25 * q * big - 5 * q * b2, Relation::lt, 25 * q * big));
  c.steps.push_back(make_step("A_vertex_balance", 25 * q * big, Relation::le, 25 * p * r.n));
  c.steps.push_back(make_step("B_equality", oriented, Relation::eq, 25 * q * V1 - 5 * q * b2));
  c.steps.push_back(make_step("B_alpha_step", 25 * q * V1 - 5 * q * b2, Relation::le, 25 * p * big));
  c.steps.push_back(make_step("B_max_bound", 25 * p * big, Relation::le, 25 * p * r.n));
  c.steps.push_back(make_step("eq3", r.eq3_lhs, Relation::le, r.eq3_rhs));
  return c;
}

/// Steps of the active converse branch ('A' or 'B'), then the oriented bound.
inline bool converse_printed_holds(const BalanceReport& r) {
  const auto& ch = r.converse_chain;
  const bool branch = r.converse_case == 'A' ? (ch[0] && ch[1] && ch[2]) : (ch[3] && ch[4] && ch[5]);
  return branch && ch[6];
}

/// Evaluates every quantity of the derivation for one nice partition of a
/// cubic graph.
inline BalanceReport eval_derivation(const Graph& g, const SeparatorPartition& partition, const Rational& alpha,
                                     std::string instance_id = {}) {
  require_alpha(alpha);
  require_cubic(g, "eval_derivation");
  const auto nice = is_nice(g, partition);
  if (!nice.nice) throw precondition_error(std::string("eval_derivation: ") + to_string(nice.failed.front()));
  auto s = boundary_stats(g, partition);
  BalanceReport r;
  r.instance_id = std::move(instance_id);
  r.n = static_cast<std::int64_t>(g.order());
  r.m = static_cast<std::int64_t>(g.size());
  r.I_size = s.separator_size;
  r.alpha = alpha;
  r.separator = partition.separator.members();
  r.side1 = partition.side1.members();
  r.side2 = partition.side2.members();
  r.sides_swapped = s.boundary[0] > s.boundary[1];
  for (int i = 0; i < 2; ++i) {
    const int from = r.sides_swapped ? 1 - i : i;
    r.V[i] = s.side_size[from];
    r.E[i] = s.internal_edges[from];
    r.EI[i] = s.separator_edges[from];
    r.beta[i] = s.boundary[from];
  }
  if (r.sides_swapped) std::swap(r.side1, r.side2);
  r.delta_beta = r.beta[1] - r.beta[0];

  const auto q = alpha.den, p = alpha.num, I = r.I_size;
  auto max2 = [](std::int64_t a, std::int64_t b) { return std::max(a, b); };
  r.eq1_lhs = 10 * q * (max2(r.V[0] + r.E[0] + r.EI[0], r.V[1] + r.E[1] + r.EI[1]) + I);
  r.eq1_rhs = 10 * p * (r.n + r.m);
  r.eq1_rewrite_lhs = 10 * q * (max2(4 * r.V[0] - r.E[0], 4 * r.V[1] - r.E[1]) + I);
  r.eq2_lhs = q * max2(25 * r.V[0] - 5 * r.beta[0], 25 * r.V[1] - 5 * r.beta[1]) + 10 * q * I;
  r.eq2_rhs = 25 * p * r.n;
  r.eq2_substituted_lhs = q * max2(25 * r.V[0] + 5 * r.beta[0], 25 * r.V[1] + 5 * r.beta[1]) + 10 * q * I;
  r.wlog_lhs = q * max2(25 * r.V[0] + 5 * r.delta_beta, 25 * r.V[1]) - 5 * q * r.beta[1] + 10 * q * I;
  r.vb_lhs = 10 * q * max2(r.V[0], r.V[1]);
  r.vb_rhs = 10 * p * r.n;
  r.eq3_lhs = q * max2(25 * r.V[0] + 5 * r.delta_beta, 25 * r.V[1]) - 5 * q * r.beta[1];
  r.eq3_rhs = 25 * p * r.n;
  r.eq1_holds = r.eq1_lhs <= r.eq1_rhs;
  r.vb_holds = r.vb_lhs <= r.vb_rhs;
  r.converse_case = 5 * r.V[0] + r.delta_beta <= 5 * r.V[1] ? 'A' : 'B';
  r.converse_with_I = r.eq3_lhs + 10 * q * I <= r.eq3_rhs;
  r.converse_eq1 = r.eq1_holds;

  const auto forward = check_forward(r);
  const auto converse = check_converse(r);
  r.forward_applicable = forward.applicable;
  r.converse_applicable = converse.applicable;
  for (const auto& step : forward.steps) r.forward_chain.push_back(step.holds);
  for (const auto& step : converse.steps) r.converse_chain.push_back(step.holds);
  return r;
}

inline nlohmann::ordered_json to_json(const BalanceReport& r) {
  nlohmann::ordered_json j;
  j["record"] = "instance";
  j["instance_id"] = r.instance_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["I_size"] = r.I_size;
  j["V1"] = r.V[0];
  j["V2"] = r.V[1];
  j["E1"] = r.E[0];
  j["E2"] = r.E[1];
  j["E1I"] = r.EI[0];
  j["E2I"] = r.EI[1];
  j["beta1"] = r.beta[0];
  j["beta2"] = r.beta[1];
  j["sides_swapped"] = r.sides_swapped;
  j["delta_beta"] = r.delta_beta;
  j["alpha"] = r.alpha.str();
  j["eq1_lhs"] = r.eq1_lhs;
  j["eq1_rhs"] = r.eq1_rhs;
  j["eq1_rewrite_lhs"] = r.eq1_rewrite_lhs;
  j["eq2_lhs"] = r.eq2_lhs;
  j["eq2_rhs"] = r.eq2_rhs;
  j["eq2_substituted_lhs"] = r.eq2_substituted_lhs;
  j["wlog_lhs"] = r.wlog_lhs;
  j["vb_lhs"] = r.vb_lhs;
  j["vb_rhs"] = r.vb_rhs;
  j["eq3_lhs"] = r.eq3_lhs;
  j["eq3_rhs"] = r.eq3_rhs;
  j["eq1_holds"] = r.eq1_holds;
  j["vb_holds"] = r.vb_holds;
  j["forward_applicable"] = r.forward_applicable;
  j["forward_chain"] = r.forward_chain;
  j["converse_applicable"] = r.converse_applicable;
  j["converse_case"] = std::string(1, r.converse_case);
  j["converse_chain"] = r.converse_chain;
  j["converse_with_I"] = r.converse_with_I;
  j["converse_eq1"] = r.converse_eq1;
  j["separator"] = r.separator;
  j["side1"] = r.side1;
  j["side2"] = r.side2;
  return j;
}

enum class CampaignSource { enumerate, random };

struct CampaignParams {
  std::size_t n_min = 4;
  std::size_t n_max = 10;
  std::vector<Rational> alphas = {{3, 5}, {2, 3}, {3, 4}};
  CampaignSource source = CampaignSource::enumerate;
  std::uint64_t seed = 0;
  std::size_t count = 0;  // graphs drawn for the random source
  /// All nice partitions up to max_separator; otherwise the oracle's optimum
  /// per alpha and problem, with niceness required.
  bool exhaustive = true;
  std::size_t max_separator = 4;
  std::size_t enumeration_cap = 10;
  std::size_t oracle_cap = 14;
};

struct CampaignSummary {
  std::size_t graphs = 0;
  std::size_t partitions = 0;
  std::size_t instances = 0;
  std::size_t forward_applicable = 0;
  std::size_t forward_failures = 0;
  std::size_t identity_failures = 0;
  std::size_t eq2_printed_mismatches = 0;
  std::size_t converse_applicable = 0;
  std::size_t converse_not_applicable = 0;
  std::size_t converse_case_a = 0;
  std::size_t converse_case_b = 0;
  std::size_t converse_printed_failures = 0;
  std::size_t eq3_failures = 0;
  std::size_t converse_with_I_flags = 0;
  std::size_t converse_eq1_flags = 0;
  std::map<std::string, std::size_t> converse_step_failures;  // active branch only

  void add(const BalanceReport& r) {
    ++instances;
    if (r.eq2_lhs != r.eq1_lhs) ++eq2_printed_mismatches;
    // steps 0..5 of the forward chain are identities that hold regardless of alpha
    for (std::size_t i = 0; i < 6; ++i) {
      if (!r.forward_chain[i]) {
        ++identity_failures;
        break;
      }
    }
    if (r.forward_applicable) {
      ++forward_applicable;
      if (!std::all_of(r.forward_chain.begin(), r.forward_chain.end(), [](bool b) { return b; })) ++forward_failures;
    }
    if (!r.converse_applicable) {
      ++converse_not_applicable;
      return;
    }
    ++converse_applicable;
    const auto& names = converse_step_names();
    const std::size_t first = r.converse_case == 'A' ? 0 : 3;
    ++(r.converse_case == 'A' ? converse_case_a : converse_case_b);
    for (std::size_t i = first; i < first + 3; ++i) {
      if (!r.converse_chain[i]) ++converse_step_failures[names[i]];
    }
    if (!r.converse_chain[6]) ++eq3_failures;
    if (!converse_printed_holds(r)) ++converse_printed_failures;
    if (!r.converse_with_I) ++converse_with_I_flags;
    if (!r.converse_eq1) ++converse_eq1_flags;
  }
};

inline nlohmann::ordered_json to_json(const CampaignSummary& s) {
  nlohmann::ordered_json j;
  j["record"] = "summary";
  j["graphs"] = s.graphs;
  j["partitions"] = s.partitions;
  j["instances"] = s.instances;
  j["forward_applicable"] = s.forward_applicable;
  j["forward_failures"] = s.forward_failures;
  j["identity_failures"] = s.identity_failures;
  j["eq2_printed_mismatches"] = s.eq2_printed_mismatches;
  j["converse_applicable"] = s.converse_applicable;
  j["converse_not_applicable"] = s.converse_not_applicable;
  j["converse_case_a"] = s.converse_case_a;
  j["converse_case_b"] = s.converse_case_b;
  j["converse_printed_failures"] = s.converse_printed_failures;
  j["eq3_failures"] = s.eq3_failures;
  j["converse_with_I_flags"] = s.converse_with_I_flags;
  j["converse_eq1_flags"] = s.converse_eq1_flags;
  nlohmann::ordered_json steps = nlohmann::ordered_json::object();
  for (const auto& name : converse_step_names()) {
    const auto it = s.converse_step_failures.find(name);
    steps[name] = it == s.converse_step_failures.end() ? 0 : it->second;
  }
  j["converse_step_failures"] = steps;
  return j;
}

/// Graphs visited by a campaign, in order.
inline std::vector<Graph> campaign_graphs(const CampaignParams& params) {
  std::vector<std::size_t> sizes;
  for (auto n = params.n_min; n <= params.n_max; ++n) {
    if (n >= 4 && n % 2 == 0) sizes.push_back(n);
  }
  if (sizes.empty()) throw precondition_error("campaign: no even n >= 4 in the requested range");
  std::vector<Graph> out;
  if (params.source == CampaignSource::enumerate) {
    for (auto n : sizes) {
      if (n > params.enumeration_cap) {
        throw capacity_error("campaign: n=" + std::to_string(n) + " exceeds enumeration cap " +
                             std::to_string(params.enumeration_cap));
      }
      for (auto& g : cubic_classes(n, params.enumeration_cap)) out.push_back(std::move(g));
    }
    return out;
  }
  std::mt19937_64 rng(params.seed);
  for (std::size_t i = 0; i < params.count; ++i) {
    const auto n = sizes[i % sizes.size()];
    out.push_back(random_cubic(n, rng()));
  }
  return out;
}

/// Runs the audit and writes one JSON line per (partition, alpha) followed by
/// the summary line. Output is a deterministic function of `params`.
inline CampaignSummary run_campaign(const CampaignParams& params, std::ostream& out) {
  for (const auto& a : params.alphas) require_alpha(a);
  if (params.alphas.empty()) throw precondition_error("campaign: no alpha values given");
  if (!params.exhaustive && params.n_max > params.oracle_cap) {
    throw capacity_error("campaign: n=" + std::to_string(params.n_max) + " exceeds oracle cap " +
                         std::to_string(params.oracle_cap));
  }
  CampaignSummary summary;
  const auto graphs = campaign_graphs(params);
  auto emit = [&](const Graph& g, const SeparatorPartition& p, const Rational& alpha, const std::string& id) {
    const auto report = eval_derivation(g, p, alpha, id);
    summary.add(report);
    out << to_json(report).dump() << '\n';
  };
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& g = graphs[gi];
    ++summary.graphs;
    const auto prefix = "n" + std::to_string(g.order()) + "/g" + std::to_string(gi);
    if (params.exhaustive) {
      std::size_t pi = 0;
      for_each_partition(g, params.max_separator, [&](const SeparatorPartition& p) {
        if (!is_nice(g, p).nice) return true;
        ++summary.partitions;
        for (const auto& alpha : params.alphas) emit(g, p, alpha, prefix + "/p" + std::to_string(pi) + "/a" + alpha.str());
        ++pi;
        return true;
      });
      continue;
    }
    for (const auto& alpha : params.alphas) {
      for (auto problem : {Problem::subgraph_balanced, Problem::vertex_balanced}) {
        SolverConfig cfg;
        cfg.problem = problem;
        cfg.alpha = alpha;
        cfg.require_nice = true;
        cfg.max_separator = params.max_separator;
        const auto outcome = brute_force_oracle(g, cfg, params.oracle_cap);
        if (outcome.status != SolveStatus::optimal) continue;
        ++summary.partitions;
        emit(g, *outcome.partition, alpha,
             prefix + "/" + (problem == Problem::subgraph_balanced ? "sbvs" : "bvs") + "/a" + alpha.str());
      }
    }
  }
  out << to_json(summary).dump() << '\n';
  return summary;
}

}  // namespace sbvs
