// Batch front end: generation, reduction, solving, verification and the
// derivation audit.
//
// Exit codes: 0 success (optimal / valid / YES), 1 certificate invalid,
// 2 infeasible / NO, 3 parse error, 4 precondition or capacity error,
// 5 time budget exhausted. Diagnostics go to stderr as
// "sbvs: error[<kind>]: <message>".

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbvs/sbvs.hpp"

namespace {

using namespace sbvs;

constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()));
  }
}

// Writes to `path`, or stdout when the path is empty or "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("cannot open '" + path + "' for writing");
  out << text;
}

Problem parse_problem(const std::string& name) {
  if (name == "vertex") return Problem::vertex_balanced;
  if (name == "subgraph") return Problem::subgraph_balanced;
  throw ParseError(0, "unknown problem '" + name + "', expected vertex or subgraph");
}

struct SolveArgs {
  std::string input;
  std::string partition;
  std::string problem = "subgraph";
  std::string alpha = "2/3";
  std::optional<std::size_t> k;
  std::optional<std::size_t> max_separator;
  std::optional<long> budget_ms;
  bool nice = false;
  bool max_degree_3 = false;
  std::string output;

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.problem = parse_problem(problem);
    cfg.alpha = parse_alpha(alpha);
    cfg.max_separator = max_separator;
    cfg.require_nice = nice;
    cfg.require_max_degree_3 = max_degree_3;
    if (budget_ms) cfg.time_budget = std::chrono::milliseconds(*budget_ms);
    return cfg;
  }
};

void add_solver_options(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("-i,--input", a.input, "graph file")->required();
  cmd->add_option("--problem", a.problem, "vertex | subgraph")->capture_default_str();
  cmd->add_option("--alpha", a.alpha, "balance factor p/q in (1/2, 1)")->capture_default_str();
  cmd->add_option("--max-separator", a.max_separator, "cap on |I|");
  cmd->add_flag("--nice", a.nice, "also require every separator vertex to touch both sides with no shared neighbours");
  cmd->add_flag("--max-degree-3", a.max_degree_3, "reject graphs with a vertex of degree above 3");
}

int run_solve(const SolveArgs& a) {
  const auto g = read_graph(a.input);
  const auto cfg = a.config();
  if (a.k) {
    const auto d = decide(g, cfg, *a.k);
    nlohmann::json j{{"decision", to_string(d)}, {"k", *a.k}};
    write_output(a.output, j.dump() + "\n");
    return d == Decision::yes ? 0 : d == Decision::no ? kExitInfeasible : kExitBudget;
  }
  const auto out = solve_min_separator(g, cfg);
  write_output(a.output, to_json(out).dump() + "\n");
  switch (out.status) {
    case SolveStatus::optimal: return 0;
    case SolveStatus::infeasible: return kExitInfeasible;
    case SolveStatus::budget_exhausted: return kExitBudget;
  }
  return kExitBudget;
}

int run_verify(const SolveArgs& a) {
  const auto g = read_graph(a.input);
  const auto cfg = a.config();
  SeparatorPartition p;
  try {
    p = parse_partition(read_file(a.partition), g.order());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), a.partition + ": " + std::string(e.what()));
  }
  const auto r = verify_certificate(g, p, cfg);
  std::string text = r.valid ? "valid\n" : "invalid\n";
  for (const auto& reason : r.reasons) text += "  " + reason + "\n";
  write_output(a.output, text);
  return r.valid ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced vertex separators on cubic graphs"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;

  auto* gen = app.add_subcommand("gen-cubic", "random connected 3-regular graph");
  gen->add_option("-n", n, "vertex count (even, >= 4)")->required();
  gen->add_option("--seed", seed, "generator seed")->capture_default_str();
  gen->add_option("-o,--output", output, "output file (default stdout)");

  bool classes = false;
  std::size_t enum_cap = 10;
  auto* enumerate = app.add_subcommand("enum-cubic", "all labeled connected cubic graphs on n vertices");
  enumerate->add_option("-n", n, "vertex count (even, >= 4)")->required();
  enumerate->add_flag("--classes", classes, "one representative per isomorphism class instead");
  enumerate->add_option("--cap", enum_cap, "largest n accepted")->capture_default_str();
  enumerate->add_option("-o,--output", output, "output file (default stdout)");

  GadgetSpec spec;
  std::string dot_path, map_path;
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--cycles", spec.cycles, "number of concentric cycles c")->required();
    cmd->add_option("--len", spec.cycle_len, "cycle length s")->required();
    cmd->add_option("--outlets", spec.outlets, "outlets per gadget t")->required();
  };
  auto* gadget = app.add_subcommand("gadget", "build one gadget");
  add_spec(gadget);
  gadget->add_option("-o,--output", output, "graph file (default stdout)");
  gadget->add_option("--dot", dot_path, "also write Graphviz DOT here");

  std::string input;
  auto* red = app.add_subcommand("reduce", "replace every vertex by a gadget");
  red->add_option("-i,--input", input, "original graph file")->required();
  add_spec(red);
  red->add_flag("--three-regular", spec.three_regular, "pair off remaining degree-2 vertices");
  red->add_flag("--doubled", spec.doubled, "install every original edge twice");
  red->add_option("-o,--output", output, "G* graph file (default stdout)");
  red->add_option("--map", map_path, "write the reduction map JSON here");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "minimum balanced separator");
  add_solver_options(solve, solve_args);
  solve->add_option("-k", solve_args.k, "decide whether |I| <= k instead of minimizing");
  solve->add_option("--budget-ms", solve_args.budget_ms, "wall-clock budget in milliseconds");
  solve->add_option("-o,--output", solve_args.output, "result JSON (default stdout)");

  SolveArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a partition certificate");
  add_solver_options(verify, verify_args);
  verify->add_option("-p,--partition", verify_args.partition, "partition file")->required();
  verify->add_option("-o,--output", verify_args.output, "report (default stdout)");

  CampaignParams params;
  std::vector<std::string> alpha_texts;
  std::string source = "enumerate";
  bool oracle_mode = false;
  auto* campaign = app.add_subcommand("campaign", "audit the balance derivation, JSON lines");
  campaign->add_option("--n-min", params.n_min, "smallest n")->capture_default_str();
  campaign->add_option("--n-max", params.n_max, "largest n")->capture_default_str();
  campaign->add_option("--alpha", alpha_texts, "balance factor p/q, repeatable (default 3/5 2/3 3/4)");
  campaign->add_option("--source", source, "enumerate | random")->capture_default_str();
  campaign->add_option("--seed", params.seed, "seed for the random source")->capture_default_str();
  campaign->add_option("--count", params.count, "graphs drawn by the random source")->capture_default_str();
  campaign->add_option("--max-separator", params.max_separator, "largest |I| considered")->capture_default_str();
  campaign->add_flag("--oracle", oracle_mode, "only the oracle's nice optimum per alpha and problem");
  campaign->add_option("-o,--output", output, "report file (default stdout)");

  std::string partition_path;
  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT, optionally coloured by a partition");
  dot->add_option("-i,--input", input, "graph file")->required();
  dot->add_option("-p,--partition", partition_path, "partition file");
  dot->add_option("-o,--output", output, "DOT file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "sbvs: error[usage]: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*gen) {
      write_output(output, serialize_graph(random_cubic(n, seed)));
    } else if (*enumerate) {
      std::ostringstream out;
      if (classes) {
        for (const auto& g : cubic_classes(n, enum_cap)) out << serialize_graph(g);
      } else {
        CubicEnumerationOptions options;
        options.cap = enum_cap;
        enumerate_cubic(
            n,
            [&](const Graph& g) {
              out << serialize_graph(g);
              return true;
            },
            options);
      }
      write_output(output, out.str());
    } else if (*gadget) {
      const auto built = build_gadget(spec);
      write_output(output, serialize_graph(built.graph));
      if (!dot_path.empty()) write_output(dot_path, export_dot(built.graph));
    } else if (*red) {
      const auto reduction = reduce(read_graph(input), spec);
      write_output(output, serialize_graph(reduction.graph));
      if (!map_path.empty()) write_output(map_path, to_json(reduction.map).dump(2) + "\n");
    } else if (*solve) {
      return run_solve(solve_args);
    } else if (*verify) {
      return run_verify(verify_args);
    } else if (*campaign) {
      if (!alpha_texts.empty()) {
        params.alphas.clear();
        for (const auto& a : alpha_texts) params.alphas.push_back(parse_alpha(a));
      }
      if (source == "random") {
        params.source = CampaignSource::random;
      } else if (source != "enumerate") {
        throw ParseError(0, "unknown source '" + source + "', expected enumerate or random");
      }
      params.exhaustive = !oracle_mode;
      std::ostringstream out;
      const auto summary = run_campaign(params, out);
      write_output(output, out.str());
      std::cerr << "sbvs: " << summary.instances << " instances, " << summary.forward_failures
                << " forward failures\n";
    } else if (*dot) {
      const auto g = read_graph(input);
      if (partition_path.empty()) {
        write_output(output, export_dot(g));
      } else {
        const auto p = parse_partition(read_file(partition_path), g.order());
        write_output(output, export_dot(g, &p));
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "sbvs: error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "sbvs: error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
