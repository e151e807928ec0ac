#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into `out`.
Result run(const std::string& args) {
  const std::string cmd = std::string("'") + ZONE_CLI + "' " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("zone_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string data(const std::string& name) { return std::string(ZONE_DATA_DIR) + "/" + name; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildJson) {
  const Result r = run("build --input " + data("e3.txt"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"upper\""), std::string::npos);
  EXPECT_NE(r.out.find("\"2/3\""), std::string::npos);
}

TEST_F(Cli, BuildIsDeterministic) {
  const Result a = run("build --stitch --input " + data("e3.txt"));
  const Result b = run("build --stitch --input " + data("e3.txt"));
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"faces\""), std::string::npos);
}

TEST_F(Cli, BuildFromStdin) {
  const Result r = run("build --format summary --input - < '" + data("e3.txt") + "'");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("n=3 upper_cells=4 lower_cells=4 forest_edges(F)=5", 0), 0u) << r.out;
}

TEST_F(Cli, BuildSvgToFile) {
  const std::string out = (dir_ / "e3.svg").string();
  const Result r = run("build --format svg --out '" + out + "' --input " + data("e3.txt"));
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(out);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str().rfind("<svg", 0), 0u);
}

TEST_F(Cli, SvgOfEmptyArrangementNeedsViewport) {
  const std::string in = write("empty.txt", "query 0 1 0\n");
  EXPECT_EQ(run("build --format svg --input '" + in + "'").code, 1);
  EXPECT_EQ(run("build --format svg --viewport=-3,-3,3,3 --input '" + in + "'").code, 0);
}

TEST_F(Cli, Trace) {
  const Result r = run("build --trace above --input " + data("e3.txt"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("[forward step 1] insert l2"), std::string::npos);
  EXPECT_NE(r.out.find("[merge C_1] event at y=4/3"), std::string::npos);
}

TEST_F(Cli, CheckPassesAndCatchesCorruption) {
  const Result ok = run("check --input " + data("e3.txt"));
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.out.rfind("ok:", 0), 0u);
  const Result bad = run("check --corrupt --input " + data("e3.txt"));
  EXPECT_EQ(bad.code, 4) << bad.out;
  EXPECT_NE(bad.out.find("mismatch"), std::string::npos);
}

TEST_F(Cli, GenRoundTripsThroughCheck) {
  const std::string path = (dir_ / "g.txt").string();
  const Result g = run("gen --seed 4 --n 15 --degeneracy mixed --out '" + path + "'");
  ASSERT_EQ(g.code, 0) << g.out;
  EXPECT_EQ(run("check --input '" + path + "'").code, 0);
  EXPECT_EQ(run("gen --seed 4 --n 15 --degeneracy mixed").out, run("gen --seed 4 --n 15 --degeneracy mixed").out);
}

TEST_F(Cli, BenchSmall) {
  const Result r = run("bench --sizes 64,128 --trials 2");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("post_sort_loglog_slope"), std::string::npos);
  const Result j = run("bench --sizes 64 --trials 1 --format json");
  EXPECT_NE(j.out.find("\"records\""), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("build").code, 1);
  EXPECT_EQ(run("build --format pdf --input " + data("e3.txt")).code, 1);
  EXPECT_EQ(run("bench --sizes 10,5 --trials 1").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ParseErrors) {
  const Result bad = run("build --input '" + write("bad.txt", "query 0 1 0\nline 1 2\n") + "'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("line 2"), std::string::npos) << bad.out;
  EXPECT_EQ(run("build --input '" + (dir_ / "missing.txt").string() + "'").code, 2);
}

TEST_F(Cli, QueryInArrangement) {
  const std::string in = write("q.txt", "query 0 1 0\nline 1 1 0\nline 0 3 0\n");
  EXPECT_EQ(run("build --input '" + in + "'").code, 3);
  EXPECT_EQ(run("check --input '" + in + "'").code, 3);
}
