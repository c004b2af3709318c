#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "hyperpoly/hyperpoly.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into out when `merge` is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + " \"" HYPERPOLY_CLI_PATH "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, BettiJsonExact) {
  const auto r = run("betti --alpha 1,1,3,3,3 --target x --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"dims\":[1,5,11],\"euler\":17}\n");
}

TEST(Cli, NonGenericRejected) {
  const auto r = run("shorts --alpha 1,1,1,1", true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NonGenericAlpha"), std::string::npos);
  EXPECT_NE(r.out.find("{1,2}"), std::string::npos);
  const auto j = run("shorts --alpha 1,1,1,1 --format json", true);
  EXPECT_EQ(j.code, 1);
  EXPECT_EQ(hyperpoly::io::json::parse(j.out)["witness"].dump(), "[1,2]");
}

TEST(Cli, Shorts) {
  const auto r = run("shorts --alpha 1,1,3,3,3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = hyperpoly::io::json::parse(r.out);
  EXPECT_EQ(j["count"], 15);
  EXPECT_EQ(j["core"], 10);
}

TEST(Cli, IntersectionFormTable) {
  const auto r = run("intersection-form --alpha 1,1,3,3,3 --s 1,2 --format table");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("b_1 - b_3 - b_4 - b_5"), std::string::npos);
  EXPECT_NE(r.out.find("1 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 -1\n"), std::string::npos);
}

TEST(Cli, RelabelingEchoed) {
  const auto r = run("betti --alpha 1,1,3,3,3 --target core --s 2,3 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"dims\":[1,2,1],\"euler\":4,\"relabeling\":[2,1,3,4,5]}\n");
  const auto t = run("betti --alpha 1,1,3,3,3 --target core --s 2,3");
  EXPECT_NE(t.out.find("relabeling: perm [2,1,3,4,5]"), std::string::npos);
}

TEST(Cli, AlphaSources) {
  const auto path = temp_file("alpha.json", R"({"alpha": ["1", "1", "3", "3", "3"]})");
  EXPECT_EQ(run("betti --alpha-file " + path + " --format json").out, "{\"dims\":[1,5,11],\"euler\":17}\n");
  EXPECT_EQ(run("betti --alpha 1,1,3,3,3 --alpha-file " + path).code, 1);
  EXPECT_EQ(run("betti").code, 1);
  EXPECT_EQ(run("betti --alpha 1,x,3").code, 1);
  EXPECT_EQ(run("betti --alpha-file /nonexistent.json").code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("betti --alpha 1,1,3,3,3 --target nope").code, 1);
  EXPECT_EQ(run("betti --alpha 1,1,3,3,3 --target core").code, 1);
  EXPECT_EQ(run("intersection-form --alpha 1,1,3,3,3 --s 3,4").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, MonomialBudget) {
  const auto r = run("betti --alpha 1,1,1,1,1,2 --target x-eq", true, "HYPERPOLY_MONOMIAL_BUDGET=5");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("DegreeBoundExceeded"), std::string::npos);
}

TEST(Cli, ClaimsAndEuler) {
  EXPECT_EQ(run("claims verify --alpha 1,1,3,3,3").code, 0);
  const auto j = run("claims verify --alpha 1,2,3,4,5,6 --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_TRUE(hyperpoly::io::json::parse(j.out)["ok"].get<bool>());
  const auto e = run("core euler-check --alpha 1,1,3,3,3");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("U_{1,2}: 6 = 2 + 1*4"), std::string::npos);
}

TEST(Cli, GraphDeterministic) {
  const std::string args = "core graph --alpha 1,1,3,3,3 --scope component --s 1,2 --format dot";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"M_S_1_2\" -- \"XT_1_2_3\""), std::string::npos);
  const auto j = run("core graph --alpha 1,1,3,3,3 --scope global --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(hyperpoly::io::json::parse(j.out)["scope"], "global");
}

TEST(Cli, PointCommands) {
  using namespace hyperpoly;
  const Alpha a = validate_alpha({"1", "1", "3", "3", "3"});
  std::mt19937_64 rng(5);
  const auto back = point_from_polygon_pair(a, random_polygon_pair(a, Subset::of(5, {1, 2}), rng));
  const auto path = temp_file("point.json", io::to_json(back.point).dump());
  const auto r = run("point check --alpha 1,1,3,3,3 --s 1,2 --format json --point-file " + path);
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["stable"].get<bool>());
  EXPECT_EQ(j["polygon_pair"]["s"].dump(), "[1,2]");

  const std::string rt = "point roundtrip --alpha 1,2,2,3,3 --s 1,2,3 --seed 9 --samples 200 --format json";
  const auto x = run(rt), y = run(rt);
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(x.out, y.out);
  EXPECT_NE(run("point roundtrip --alpha 1,2,2,3,3 --s 1,2,3 --seed 10 --samples 200 --format json").out, x.out);
}

TEST(Cli, Presentation) {
  const auto r = run("presentation --alpha 1,1,3,3,3 --target polygon-sub --s 1,2 --format json");
  ASSERT_EQ(r.code, 0);
  const auto p = hyperpoly::io::presentation_from_json(hyperpoly::io::json::parse(r.out));
  EXPECT_EQ(p.provenance, hyperpoly::Provenance::PolsKer);
  EXPECT_EQ(hyperpoly::betti(hyperpoly::x_to_zero(p)).euler(), 2);
}
