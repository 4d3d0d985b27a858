#include "cli.hpp"

#include "coxy/coxy.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

using coxy::cli::run;
using coxy::testing::data_path;

namespace {

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::map<std::string, std::string> porcelain(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos)
      out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

} // namespace

TEST(Cli, SolveWorkedExample) {
  auto r = run({"solve", data_path("sixpts.graph"), "c e c x", "--tree", "a,b,c,d,e"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "NONTRIVIAL kernel element: x_{14}")) << r.out;
  EXPECT_TRUE(contains(r.out, "witness: () | 1: x, 4: x^-1")) << r.out;
}

TEST(Cli, SolveTrivialAndPermutation) {
  auto t = run({"solve", data_path("triangle.graph"), "a c a c a c"});
  EXPECT_EQ(t.exit_code, 0);
  EXPECT_EQ(t.out, "TRIVIAL\n");
  auto p = run({"solve", data_path("triangle.graph"), "a"});
  EXPECT_TRUE(contains(p.out, "NONTRIVIAL permutation: (1 2)")) << p.out;
}

TEST(Cli, PorcelainWitnessWordReproducesElement) {
  auto r = run({"--porcelain", "solve", data_path("sixpts.graph"), "c a d a c z b y"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto kv = porcelain(r.out);
  EXPECT_EQ(kv["verdict"], "nontrivial");
  EXPECT_EQ(kv["n"], "6");
  EXPECT_EQ(kv["t"], "3");
  auto ctx = coxy::Context(coxy::testing::sixpts());
  auto word = coxy::EdgeWord::parse(kv["word"]);
  EXPECT_TRUE(coxy::equal(ctx, word, coxy::EdgeWord::parse("c a d a c z b y")).is_trivial());
}

TEST(Cli, EqualAndKernel) {
  auto e = run({"equal", data_path("triangle.graph"), "a c a", "c a c"});
  EXPECT_EQ(e.out, "EQUAL\n");
  auto ne = run({"equal", data_path("triangle.graph"), "b a", "c a"});
  EXPECT_TRUE(contains(ne.out, "NOT EQUAL")) << ne.out;
  auto k = run({"kernel", data_path("triangle.graph"), "b a c a"});
  EXPECT_TRUE(contains(k.out, "IN KERNEL:")) << k.out;
  auto nk = run({"kernel", data_path("triangle.graph"), "a c"});
  EXPECT_TRUE(contains(nk.out, "NOT IN KERNEL:")) << nk.out;
}

TEST(Cli, K4IsQuotientOnly) {
  auto r = run({"solve", data_path("k4.graph"), "u3 v u3 u2 y u2 x z x u2 y u2 u3 v u3 u2 y u2 x z x u2 y u2"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  auto a = run({"analyze", data_path("k4.graph")});
  EXPECT_TRUE(contains(a.out, "isK4=yes")) << a.out;
  EXPECT_TRUE(contains(a.out, "wordProblemExact=no")) << a.out;
}

TEST(Cli, Analyze) {
  auto r = run({"analyze", data_path("c6.graph")});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "t=1 virtually abelian, S_6 ⋉ Z^5")) << r.out;
  auto p = porcelain(run({"--porcelain", "analyze", data_path("sixpts.graph")}).out);
  EXPECT_EQ(p["rank"], "15");
  EXPECT_EQ(p["classification"], "contains_free_subgroup");
  EXPECT_EQ(p["t"], "3");
  EXPECT_EQ(p["tree"], "a,x,c,b,d");
}

TEST(Cli, Verify) {
  auto r = run({"--porcelain", "verify", data_path("sixpts.graph"), "--trials", "20", "--seed", "3"});
  EXPECT_EQ(r.exit_code, 0) << r.err << r.out;
  auto kv = porcelain(r.out);
  EXPECT_EQ(kv["status"], "pass");
  EXPECT_EQ(kv["failures"], "0");
  EXPECT_EQ(kv["seed"], "3");
}

TEST(Cli, Tsaranov) {
  auto kv = porcelain(run({"--porcelain", "tsaranov", "3", "3", "3"}).out);
  EXPECT_EQ(kv["n"], "5");
  EXPECT_EQ(kv["t"], "3");
  EXPECT_EQ(kv["chords"], "q1,q2,q3");
  EXPECT_EQ(run({"tsaranov", "0", "3", "3"}).exit_code, 2);
}

TEST(Cli, Relators) {
  auto r = run({"relators", data_path("triangle.graph"), "--kind", "coxeter"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "a a")) << r.out;
  EXPECT_EQ(run({"relators", data_path("triangle.graph"), "--kind", "bogus"}).exit_code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"solve", data_path("triangle.graph"), "a q"}).exit_code, 1);
  EXPECT_EQ(run({"solve", data_path("missing.graph"), "a"}).exit_code, 2);
  auto bad = run({"analyze", data_path("loop.graph")});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_TRUE(contains(bad.err, "line")) << bad.err;
  EXPECT_EQ(run({"analyze", data_path("disconnected.graph")}).exit_code, 2);
  EXPECT_EQ(run({"analyze", data_path("triangle.graph"), "--tree", "a,b,c"}).exit_code, 2);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}
