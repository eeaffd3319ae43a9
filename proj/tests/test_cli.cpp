// Runs the built executable and checks output and exit status.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ALEXINV_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Run r{-1, {}};
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, ComputeJson) {
  const auto r = run("compute --pd '[[1,4,2,5],[3,6,4,1],[5,2,6,3]]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"delta\":[[1,-1,1]],\"Delta\":[[1,-1,1]],\"ambiguous\":[],\"method\":\"fast\"}\n");
}

TEST(Cli, ComputePretty) {
  const auto r = run("compute --format pretty --pd '[[1,4,2,5],[3,6,4,1],[5,2,6,3]]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Delta_1 = t^2 - t + 1"), std::string::npos);
}

TEST(Cli, ComputeOracle) {
  const auto r = run("compute --policy oracle-only --pd '[[1,4,2,5],[3,6,4,1],[5,2,6,3]]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"method\":\"oracle\""), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("compute --pd '[[1,2,3]]'").status, 1);
  EXPECT_EQ(run("compute").status, 1);
  EXPECT_EQ(run("compute --pd '[]' --format xml").status, 1);
  EXPECT_EQ(run("batch --input /nonexistent/knots.csv").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("smith --input " + temp_file("ragged.json", "[[[1],[2]],[[3]]]")).status, 1);
}

TEST(Cli, Smith) {
  const auto r = run("smith --input " + temp_file("m.json", "[[[1,-1,1],[0]],[[0],[1,-2,3,-2,1]]]"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"diagonal\":[[1,-1,1],[1,-2,3,-2,1]],\"delta\":[[1,-2,3,-2,1],[1,-1,1]]}\n");
}

TEST(Cli, BatchCsvAndJsonl) {
  const std::string in = temp_file("knots.csv", "name,pd\n3_1,\"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"\nbad,\"[[1]]\"\n");
  const auto csv = run("batch --jobs 2 --input " + in);
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), alexinv::batch_csv_header());
  const std::string out = std::string(TEST_TMP_DIR) + "/out.jsonl";
  EXPECT_EQ(run("batch --input " + in + " --output " + out).status, 0);
  std::ifstream f(out);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line.rfind("{\"name\":\"3_1\",\"delta\":[[1,-1,1]]", 0), 0U) << line;
}

TEST(Cli, Bench) {
  const auto r = run("bench --compare --input " + testsupport::fixture("table1.csv"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("policy: fast"), std::string::npos);
  EXPECT_NE(r.out.find("speedup"), std::string::npos);
}
