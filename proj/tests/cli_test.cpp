#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(HYPERTREE_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const auto dir = fs::temp_directory_path() / ("hypertree_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto out = dir / "out.txt";
  const auto err = dir / "err.txt";
  const std::string cmd = std::string(HYPERTREE_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  Run r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  fs::remove_all(dir);
  return r;
}

TEST(Cli, AnalyzeThenReconstructRoundTrips) {
  const auto a = run("analyze --input " + data("f3.json"));
  ASSERT_EQ(a.status, 0) << a.err;
  const auto complex = json::parse(a.out);
  EXPECT_EQ(complex.at("cells").size(), 3u);

  const auto path = fs::temp_directory_path() / ("hypertree_f3_" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << a.out;
  const auto r = run("reconstruct --input " + path.string());
  fs::remove(path);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto tree = json::parse(r.out);
  EXPECT_EQ(tree.at("edges").size(), 7u);
  EXPECT_EQ(tree.at("basepoint"), "r0");
}

TEST(Cli, AnalyzeReadsStdinAndNormalizes) {
  const auto a = run("analyze --input - < " + data("subdivided_arc.json"));
  ASSERT_EQ(a.status, 0) << a.err;
  const auto complex = json::parse(a.out);
  EXPECT_EQ(complex.at("ord_basepoint"), 1);
  EXPECT_EQ(complex.at("attached"), 2);
  EXPECT_EQ(complex.at("cells").size(), 1u);
}

TEST(Cli, AnalyzeDot) {
  const auto a = run("analyze --format dot --input " + data("f3.json"));
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_NE(a.out.find("digraph hasse"), std::string::npos);
}

TEST(Cli, CompareVerdicts) {
  const auto same = run("compare --input " + data("arc.json") + " --input " + data("subdivided_arc.json"));
  ASSERT_EQ(same.status, 0) << same.err;
  EXPECT_EQ(same.out.substr(0, same.out.find('\n')), "equivalent");
  const auto diff = run("compare --format json --input " + data("f2_p.json") + " --input " + data("f2_x1.json"));
  ASSERT_EQ(diff.status, 0) << diff.err;
  EXPECT_EQ(json::parse(diff.out).at("result"), "distinct");
}

TEST(Cli, VerifySingleTreeAndSweep) {
  const auto one = run("verify --input " + data("f3.json"));
  EXPECT_EQ(one.status, 0) << one.out;
  EXPECT_NE(one.out.find("PASS"), std::string::npos);
  const auto sweep = run("verify --max-edges 5 --format json --jobs 2");
  ASSERT_EQ(sweep.status, 0) << sweep.out;
  const auto j = json::parse(sweep.out);
  EXPECT_TRUE(j.at("pointed_sweep").at("passed").get<bool>());
  EXPECT_TRUE(j.at("uniqueness_sweep").at("passed").get<bool>());
  EXPECT_TRUE(j.at("corollary_sweep").at("passed").get<bool>());
}

TEST(Cli, EnumerateCounts) {
  const auto e = run("enumerate --max-edges 6");
  ASSERT_EQ(e.status, 0) << e.err;
  EXPECT_EQ(json::parse(e.out).size(), 7u);
  const auto p = run("enumerate --max-edges 3 --pointed --format table");
  ASSERT_EQ(p.status, 0) << p.err;
  EXPECT_EQ(std::count(p.out.begin(), p.out.end(), '\n'), 5);
}

TEST(Cli, Kx) {
  const auto k = run("kx --format json --input " + data("f2_p.json"));
  ASSERT_EQ(k.status, 0) << k.err;
  EXPECT_EQ(json::parse(k.out), json::parse(R"({"kx_size": 4, "homogeneity_degree": 4})"));
}

TEST(Cli, BadInputExitsWithTwo) {
  const auto cyc = run("analyze --input " + data("cycle.json"));
  EXPECT_EQ(cyc.status, 2);
  EXPECT_NE(cyc.err.find("CycleDetected"), std::string::npos) << cyc.err;
  EXPECT_EQ(run("analyze --input " + data("truncated.json")).status, 2);
  EXPECT_EQ(run("analyze --input /nonexistent/tree.json").status, 2);
  EXPECT_EQ(run("reconstruct --input " + data("corrupted_f3_complex.json")).status, 2);
  EXPECT_EQ(run("enumerate").status, 2);
  EXPECT_EQ(run("analyze --format svg --input " + data("f3.json")).status, 2);
}

}  // namespace
