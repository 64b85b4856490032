#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sbvs/sbvs.hpp"

namespace sbvs {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  fs::create_directories(SBVS_TEST_SCRATCH);
  return fs::path(SBVS_TEST_SCRATCH) / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

Run run(const std::string& args) {
  const std::string tag = ::testing::UnitTest::GetInstance()->current_test_info()->name();
  const auto out = scratch(tag + ".stdout"), err = scratch(tag + ".stderr");
  const std::string cmd = std::string(SBVS_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

TEST(Cli, SolveSixCycle) {
  const auto graph = scratch("c6.txt");
  write(graph, serialize_graph(cycle_graph(6)));
  const auto r = run("solve -i " + graph.string() + " --problem subgraph --alpha 3/5");
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["status"], "optimal");
}

TEST(Cli, SolveInfeasibleExitsTwo) {
  const auto graph = scratch("k4.txt");
  write(graph, serialize_graph(complete_graph(4)));
  const auto r = run("solve -i " + graph.string() + " --problem vertex --alpha 2/3");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "infeasible");
}

TEST(Cli, DecisionMode) {
  const auto graph = scratch("c6.txt");
  write(graph, serialize_graph(cycle_graph(6)));
  EXPECT_EQ(run("solve -i " + graph.string() + " -k 1").code, 2);
  const auto yes = run("solve -i " + graph.string() + " -k 2");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(nlohmann::json::parse(yes.out)["decision"], "YES");
}

TEST(Cli, MaxDegreeFlagRejectsDenseInput) {
  const auto graph = scratch("k5.txt");
  write(graph, serialize_graph(complete_graph(5)));
  EXPECT_EQ(run("solve -i " + graph.string() + " --problem vertex").code, 2);
  const auto r = run("solve -i " + graph.string() + " --problem vertex --max-degree-3");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.err.rfind("sbvs: error[precondition]:", 0), 0u) << r.err;
}

TEST(Cli, VerifyReportsSidesConnected) {
  const auto graph = scratch("k4.txt"), part = scratch("k4_part.txt");
  write(graph, serialize_graph(complete_graph(4)));
  write(part, "I: 0\nV1: 1\nV2: 2 3\n");
  const auto r = run("verify -i " + graph.string() + " -p " + part.string() + " --problem vertex --alpha 2/3");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("sides connected"), std::string::npos) << r.out;
}

TEST(Cli, VerifyValidCertificate) {
  const auto graph = scratch("c6.txt"), part = scratch("c6_part.txt");
  write(graph, serialize_graph(cycle_graph(6)));
  write(part, "I: 0 3\nV1: 1 2\nV2: 4 5\n");
  const auto r = run("verify -i " + graph.string() + " -p " + part.string() + " --alpha 3/5");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(run("verify -i " + graph.string() + " -p " + part.string() + " --alpha 501/1000").code, 1);
}

TEST(Cli, GadgetWritesGraphAndDot) {
  const auto graph = scratch("gadget.txt"), dot = scratch("gadget.dot");
  const auto r = run("gadget --cycles 16 --len 16 --outlets 4 -o " + graph.string() + " --dot " + dot.string());
  EXPECT_EQ(r.code, 0) << r.err;
  const auto g = parse_graph(slurp(graph));
  EXPECT_EQ(g.order(), 256u);
  EXPECT_EQ(slurp(dot).rfind("graph G {", 0), 0u);
}

TEST(Cli, ReduceWritesGraphAndMap) {
  const auto in = scratch("k4.txt"), out = scratch("k4_star.txt"), map = scratch("k4_map.json");
  write(in, serialize_graph(complete_graph(4)));
  const auto r = run("reduce -i " + in.string() + " --cycles 4 --len 8 --outlets 4 --three-regular -o " + out.string() +
                     " --map " + map.string());
  EXPECT_EQ(r.code, 0) << r.err;
  const auto g = parse_graph(slurp(out));
  EXPECT_TRUE(is_k_regular(g, 3));
  const auto j = nlohmann::json::parse(slurp(map));
  EXPECT_EQ(j["total_order"], g.order());
}

TEST(Cli, CapacityErrorExitsFour) {
  const auto in = scratch("k4.txt");
  write(in, serialize_graph(complete_graph(4)));
  const auto r = run("reduce -i " + in.string() + " --cycles 4 --len 8 --outlets 3");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.err.rfind("sbvs: error[capacity]:", 0), 0u) << r.err;
}

TEST(Cli, ParseErrorsExitThree) {
  const auto bad = scratch("bad.txt");
  write(bad, "p 3 2\ne 0 1\ne 1 7\n");
  const auto r = run("solve -i " + bad.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("sbvs: error[parse]:", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("line 3"), std::string::npos);

  const auto graph = scratch("c6.txt");
  write(graph, serialize_graph(cycle_graph(6)));
  EXPECT_EQ(run("solve -i " + graph.string() + " --alpha 0.6").code, 3);
  EXPECT_EQ(run("solve -i " + graph.string() + " --alpha 1/2").code, 4);
  EXPECT_EQ(run("solve -i " + graph.string() + " --problem other").code, 3);
  EXPECT_EQ(run("no-such-command").code, 3);
}

TEST(Cli, GenCubicIsDeterministic) {
  const auto a = run("gen-cubic -n 20 --seed 5");
  const auto b = run("gen-cubic -n 20 --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(is_k_regular(parse_graph(a.out), 3));
  EXPECT_EQ(run("gen-cubic -n 7").code, 4);
}

TEST(Cli, EnumCubicStreams) {
  const auto all = run("enum-cubic -n 6");
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(parse_graph_stream(all.out).size(), 70u);
  const auto reps = run("enum-cubic -n 8 --classes");
  EXPECT_EQ(parse_graph_stream(reps.out).size(), 5u);
  EXPECT_EQ(run("enum-cubic -n 12").code, 4);
}

TEST(Cli, CampaignIsReproducible) {
  const auto a = run("campaign --source random --n-min 12 --n-max 12 --count 10 --seed 7");
  const auto b = run("campaign --source random --n-min 12 --n-max 12 --count 10 --seed 7");
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto last = a.out.substr(a.out.rfind('\n', a.out.size() - 2) + 1);
  EXPECT_EQ(nlohmann::json::parse(last)["record"], "summary");
}

TEST(Cli, ExportDotWithPartition) {
  const auto graph = scratch("c6.txt"), part = scratch("c6_part.txt");
  write(graph, serialize_graph(cycle_graph(6)));
  write(part, "I: 0 3\nV1: 1 2\nV2: 4 5\n");
  const auto r = run("export-dot -i " + graph.string() + " -p " + part.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group=I"), std::string::npos);
}

}  // namespace
}  // namespace sbvs
