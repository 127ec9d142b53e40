#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace konig {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(KONIG_SAMPLE_DATA) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("konig_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

TEST(CliCheck, TriangleWithDsu) {
  const auto r = run({"check", sample("triangle.txt"), "--algo", "dsu"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "[dsu] odd_cycle  n=3 m=3\n  cycle (length 3): 0 1 2\n  edge ids: 0 1 2\n");
}

TEST(CliCheck, SquareJsonAllAgree) {
  const auto r = run({"check", sample("c4.txt"), "--json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "bipartite");
  EXPECT_TRUE(doc["agree"].get<bool>());
  ASSERT_EQ(doc["reports"].size(), 4u);
  for (const auto& rep : doc["reports"]) {
    EXPECT_EQ(rep["verdict"], "bipartite");
    // Which class is X depends on the checker; the partition itself does not.
    auto sides = rep["sides"].get<std::vector<std::vector<int>>>();
    std::sort(sides.begin(), sides.end());
    EXPECT_EQ(sides, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
    EXPECT_FALSE(rep.contains("elapsed_ns"));
  }
}

TEST(CliCheck, TimingIsOptIn) {
  const auto r = run({"check", sample("c4.txt"), "--algo", "flip", "--timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("elapsed_ns="), std::string::npos);
}

TEST(CliCheck, PetersenDimacs) {
  const auto r = run({"check", sample("petersen.dimacs"), "--format", "dimacs", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& rep : doc["reports"]) EXPECT_EQ(rep["cycle"].size() % 2, 1u);
}

TEST(CliCheck, MalformedFileIsUsageError) {
  TempDir dir;
  const auto r = run({"check", dir.file("bad.txt", "0 1\n1 zz\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliCheck, MissingFileAndBadOptions) {
  EXPECT_EQ(run({"check", "/nonexistent/g.txt"}).code, 2);
  EXPECT_EQ(run({"check", sample("c4.txt"), "--algo", "magic"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCheck, DotOutput) {
  TempDir dir;
  const auto dot = dir.path("tri.dot");
  EXPECT_EQ(run({"check", sample("triangle.txt"), "--algo", "growth", "--dot", dot}).code, 1);
  std::ifstream in(dot);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  EXPECT_EQ(text.rfind("graph konig {", 0), 0u);
  EXPECT_NE(text.find("color=red"), std::string::npos);
}

TEST(CliCheck, Deterministic) {
  for (const auto* algo : {"growth", "flip", "dsu", "forest", "all"}) {
    EXPECT_EQ(run({"check", sample("petersen.dimacs"), "--format", "dimacs", "--algo", algo}).out,
              run({"check", sample("petersen.dimacs"), "--format", "dimacs", "--algo", algo}).out);
  }
}

TEST(CliGen, CompleteBipartite) {
  const auto r = run({"gen", "--kind", "planted-bipartite", "--left", "3", "--right", "3", "--p", "1.0",
                      "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  const auto g = parse_edge_list(r.out);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
}

TEST(CliGen, EvenCycleLengthRejected) {
  const auto r = run({"gen", "--kind", "planted-odd-cycle", "--left", "2", "--right", "2",
                      "--cycle-len", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliGen, MAndPAreExclusive) {
  EXPECT_EQ(run({"gen", "--kind", "random", "--n", "5", "--m", "3", "--p", "0.5"}).code, 2);
}

TEST(CliGen, GoldenSnapshot) {
  const auto r = run({"gen", "--kind", "random", "--n", "12", "--m", "20", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_text_file(std::string(KONIG_TEST_DATA) + "/random_n12_m20_s7.txt"));
}

TEST(CliGen, OutputFileMatchesStdout) {
  TempDir dir;
  const auto path = dir.path("g.dimacs");
  const std::vector<std::string> base{"gen", "--kind", "forest", "--n", "40", "--seed", "3", "--format", "dimacs"};
  auto to_file = base;
  to_file.insert(to_file.end(), {"-o", path});
  EXPECT_EQ(run(to_file).code, 0);
  EXPECT_EQ(read_text_file(path), run(base).out);
}

TEST(CliBench, OneCellGivesFourRows) {
  const auto r = run({"bench", "--sizes", "50:100", "--seeds", "1", "--kinds", "planted-bipartite"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  const char* order[] = {"growth,", "flip,", "dsu,", "forest,"};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].rfind(order[i], 0), 0u) << rows[i];
    EXPECT_NE(rows[i].find(",bipartite,"), std::string::npos) << rows[i];
  }
}

TEST(CliBench, BadSizeIsUsageError) {
  EXPECT_EQ(run({"bench", "--sizes", "50x100"}).code, 2);
  EXPECT_EQ(run({"bench", "--kinds", "nope"}).code, 2);
}

// ----------------------------------------------------------------------------
// the real binary
// ----------------------------------------------------------------------------

Run spawn(const std::string& args) {
  const std::string cmd = std::string(KONIG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  char buf[4096];
  while (const auto n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(spawn("check " + sample("triangle.txt")).code, 1);
  EXPECT_EQ(spawn("check " + sample("c4.txt")).code, 0);
  EXPECT_EQ(spawn("check /nonexistent/g.txt").code, 2);
  EXPECT_EQ(spawn("--help").code, 0);
}

TEST(CliBinary, MatchesInProcessOutput) {
  const auto a = spawn("check " + sample("petersen.dimacs") + " --format dimacs --json");
  const auto b = run({"check", sample("petersen.dimacs"), "--format", "dimacs", "--json"});
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace konig
