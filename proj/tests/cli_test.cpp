#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "graphdelta/constructions.hpp"
#include "graphdelta/graph_io.hpp"

namespace graphdelta {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "graphdelta");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Analyze) {
  Invocation r = run({"analyze", encode_graph6(cycle(8))});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("f=0 d=4 k=2 phi=6"), std::string::npos);
  EXPECT_NE(r.out.find("free: -"), std::string::npos);

  r = run({"analyze", encode_graph6(path(8))});
  EXPECT_NE(r.out.find("f=2 d=7 k=1 phi=10"), std::string::npos);
  EXPECT_NE(r.out.find("free: 1 8"), std::string::npos);

  r = run({"analyze", to_json(complete_bipartite(2, 6))});
  EXPECT_NE(r.out.find("f=0 d=2 k=2 phi=4"), std::string::npos);

  EXPECT_EQ(run({"analyze", encode_graph6(Graph::empty(3))}).code, cli::kDisconnected);
  EXPECT_EQ(run({"analyze", "not graph6!"}).code, cli::kParseError);
}

TEST(Cli, AnalyzeReadsFiles) {
  const auto path_on_disk = std::filesystem::temp_directory_path() / "graphdelta_cli_test.json";
  std::ofstream(path_on_disk) << to_json(cycle(5)) << '\n';
  const Invocation r = run({"analyze", path_on_disk.string()});
  std::filesystem::remove(path_on_disk);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("n=5 f=0 d=2 k=2 phi=4"), std::string::npos);
}

TEST(Cli, Check) {
  Invocation r = run({"check", "8", "0", "2", "1"});
  EXPECT_EQ(r.code, cli::kInfeasible);
  EXPECT_NE(r.out.find("INFEASIBLE PHI3_SMALL_N"), std::string::npos);

  r = run({"check", "12", "3", "4", "3"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("FEASIBLE MAIN_BOUND"), std::string::npos);

  r = run({"check", "7", "0", "2", "1"});
  EXPECT_EQ(r.code, cli::kOutOfRange);
  EXPECT_NE(r.err.find("census"), std::string::npos);

  EXPECT_EQ(run({"check", "8", "x", "2", "1"}).code, cli::kParseError);
  EXPECT_EQ(run({"check", "8", "-1", "2", "1"}).code, cli::kParseError);
}

TEST(Cli, Build) {
  Invocation r = run({"build", "9", "0", "2", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, encode_graph6(join(complete(1), disjoint_union(cycle(4), cycle(4)))) + "\n");

  r = run({"build", "8", "1", "6", "1", "--recipe"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("family Fig-2"), std::string::npos);

  r = run({"build", "8", "2", "2", "2", "--format", "dot", "--zero-based"});
  EXPECT_NE(r.out.find("graph G {"), std::string::npos);
  EXPECT_NE(r.out.find("0 -- "), std::string::npos);

  r = run({"build", "8", "2", "2", "2", "--format", "json"});
  EXPECT_EQ(r.out.rfind(R"({"n":8,)", 0), 0U);

  EXPECT_EQ(run({"build", "8", "4", "2", "5"}).code, cli::kInfeasible);
  EXPECT_EQ(run({"build", "8", "1", "3", "2", "--format", "png"}).code, cli::kParseError);
}

TEST(Cli, Census) {
  Invocation r = run({"census", "4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,f,d,k,count,sample_graph6,universe");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);

  r = run({"census", "5", "--mode", "labeled", "--jobs", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find(",labeled\n"), std::string::npos);

  r = run({"census", "9", "--mode", "sampled", "--seed", "3", "--draws", "50"});
  EXPECT_NE(r.out.find("sampled:seed=3:draws=50"), std::string::npos);

  EXPECT_EQ(run({"census", "8", "--mode", "labeled"}).code, cli::kOutOfRange);
  EXPECT_EQ(run({"census", "4", "--mode", "bogus"}).code, cli::kParseError);
}

TEST(Cli, CensusWritesFile) {
  const auto out = std::filesystem::temp_directory_path() / "graphdelta_census_test.csv";
  EXPECT_EQ(run({"census", "5", "--out", out.string()}).code, cli::kOk);
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::remove(out);
  EXPECT_EQ(text.str().rfind("n,f,d,k,", 0), 0U);
}

TEST(Cli, VerifyRange) {
  const Invocation r = run({"verify-range", "8", "10"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("n=8..10: checked "), std::string::npos);
  EXPECT_NE(r.out.find(" 0 mismatches"), std::string::npos);
  EXPECT_EQ(run({"verify-range", "7", "9"}).code, cli::kOutOfRange);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

}  // namespace
}  // namespace graphdelta
