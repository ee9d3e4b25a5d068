#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "arcfix/graph_io.hpp"
#include "arcfix/patterns.hpp"
#include "cli.hpp"
#include "testkit.hpp"

using namespace arcfix;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("arcfix_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string save(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string save(const std::string& name, const Graph& g) { return save(name, write_graph(g)); }

 private:
  std::filesystem::path dir_;
};

std::vector<PatternKind> catalog() {
  std::vector<PatternKind> out = {PatternKind::claw(),  PatternKind::c3_star(), PatternKind::c4_star(),
                                  PatternKind::c_star(6), PatternKind::cycle(7), PatternKind::wheel(4),
                                  PatternKind::wheel(5), PatternKind::tent(),    PatternKind::net(),
                                  PatternKind::tent_plus_isolated(), PatternKind::prism()};
  for (int i = 1; i <= 4; ++i) {
    out.push_back(PatternKind::f(i));
    out.push_back(PatternKind::complement_of(PatternKind::f(i)));
  }
  out.push_back(PatternKind::complement_of(PatternKind::cycle(6)));
  return out;
}

}  // namespace

TEST_F(Cli, GenTent) {
  auto r = call({"gen", "--name", "tent"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "6 9");
}

TEST_F(Cli, GenRoundTripsEveryKind) {
  for (const auto& kind : catalog()) {
    auto r = call({"gen", "--name", kind.name()});
    ASSERT_EQ(r.code, cli::kOk) << kind.name() << ": " << r.err;
    std::istringstream in(r.out);
    Graph g = read_graph(in);
    EXPECT_EQ(g, testkit::pattern(kind)) << kind.name();
    EXPECT_TRUE(find_induced(g, kind)) << kind.name();
  }
}

TEST_F(Cli, GenRandom) {
  for (std::string kind : {"planted-phcag", "planted-pca", "planted-completion"}) {
    auto a = call({"gen", "--random", kind, "--n", "20", "--k", "2", "--seed", "5"});
    auto b = call({"gen", "--random", kind, "--n", "20", "--k", "2", "--seed", "5"});
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::istringstream in(a.out);
    EXPECT_EQ(read_graph(in).order(), 20);
  }
}

TEST_F(Cli, SolveW4DeletesARimVertex) {
  Graph w4 = testkit::pattern(PatternKind::wheel(4));
  auto r = call({"solve", "--problem", "phcag-vd", "-k", "1", "--verify", save("w4.g", w4)});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  json j = r.j();
  EXPECT_EQ(j["answer"], "yes");
  ASSERT_EQ(j["solution"]["deletedVertices"].size(), 1u);
  EXPECT_EQ(w4.degree(j["solution"]["deletedVertices"][0].get<int>()), 3);
  EXPECT_EQ(j["verified"], true);
  EXPECT_TRUE(j["stats"].contains("nodesExplored"));
  EXPECT_TRUE(j["stats"].contains("timeMs"));
}

TEST_F(Cli, RecognizeClawAsPca) {
  auto r = call({"recognize", "--class", "pca", save("claw.g", testkit::pattern(PatternKind::claw()))});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  json j = r.j();
  EXPECT_EQ(j["member"], false);
  EXPECT_EQ(j["witness"]["kind"], "Claw");
  EXPECT_EQ(j["witness"]["vertices"].size(), 4u);
}

TEST_F(Cli, RecognizeGivesArcs) {
  auto r = call({"recognize", "--class", "phcag", save("c7.g", testkit::cycle(7))});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  json j = r.j();
  EXPECT_EQ(j["member"], true);
  EXPECT_EQ(j["representation"]["arcs"].size(), 7u);
}

TEST_F(Cli, VerifiedSolutions) {
  const std::vector<std::string> problems = {"pivd",        "pied",       "pi-mixed", "phcag-vd", "phcag-ed",
                                             "phcag-mixed", "phcag-comp", "pca-vd",   "bpvd"};
  std::mt19937_64 rng(1);
  int yes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::string file = save("g" + std::to_string(trial) + ".g", testkit::random_graph(7, 0.5, rng));
    for (const auto& p : problems) {
      auto r = call({"solve", "--problem", p, "-k", "2", "--k2", "1", "--verify", file});
      ASSERT_EQ(r.code, cli::kOk) << p << ": " << r.err;
      json j = r.j();
      if (j["answer"] != "yes") continue;
      ++yes;
      EXPECT_EQ(j["verified"], true) << p;
    }
  }
  EXPECT_GT(yes, 50);
}

TEST_F(Cli, ApproxAndOracle) {
  std::string claw = save("claw.g", testkit::pattern(PatternKind::claw()));
  auto a = call({"approx", "--class", "pca", claw});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_GE(a.j()["size"].get<int>(), 1);

  auto m = call({"oracle", "member", "--class", "pi", claw});
  ASSERT_EQ(m.code, cli::kOk) << m.err;
  EXPECT_EQ(m.j()["member"], false);

  auto e = call({"oracle", "edit", "--class", "pi", "--k1", "1", claw});
  ASSERT_EQ(e.code, cli::kOk) << e.err;
  EXPECT_EQ(e.j()["answer"], "yes");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(call({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(call({"solve", "--problem", "nope", "-k", "1", "x.g"}).code, cli::kUsage);
  EXPECT_EQ(call({"recognize", "--class", "pi", save("bad.g", "3 1\n0 7\n")}).code, cli::kParse);
  EXPECT_EQ(call({"recognize", "--class", "pi", save("dup.g", "3 2\n0 1\n0 1\n")}).code, cli::kParse);
  EXPECT_EQ(call({"recognize", "--class", "pi", "/nonexistent/graph.g"}).code, cli::kParse);
  EXPECT_EQ(call({"oracle", "member", "--class", "pi", save("big.g", testkit::cycle(30))}).code, cli::kOracleCap);
  EXPECT_EQ(call({"gen"}).code, cli::kUsage);
}
