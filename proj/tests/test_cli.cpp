#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aspl/cli.hpp"
#include "aspl/graph.hpp"
#include "aspl/rational.hpp"

namespace aspl {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("aspl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kStar = "0 1\n0 2\n0 3\n";
const std::string kC4 = "0 1\n1 2\n2 3\n0 3\n";

TEST_F(CliTest, ComputeStarJson) {
  const auto r = run({"compute", file("star.txt", kStar), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.parsed();
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["command"][0], "compute");
  const auto& p = doc["payload"];
  EXPECT_EQ(p["L"], "3/2");
  EXPECT_EQ(p["C_WS"], "0/1");
  EXPECT_EQ(p["geodetic"], true);
  EXPECT_EQ(p["even_cycle_free"], true);
  EXPECT_EQ(p["stress"][0], 6);
  EXPECT_EQ(p["pendant_count"], 3);
}

TEST_F(CliTest, ComputeTriangleAndPath) {
  const auto k3 = run({"compute", file("k3.txt", "0 1\n1 2\n0 2\n"), "--format", "json"}).parsed()["payload"];
  EXPECT_EQ(k3["L"], "1/1");
  EXPECT_EQ(k3["C_WS"], "1/1");
  const auto p3 = run({"compute", file("p3.txt", "0 1\n1 2\n"), "--format", "json"}).parsed()["payload"];
  EXPECT_EQ(p3["stress"], json::array({0, 2, 0}));
}

TEST_F(CliTest, JsonRationalsParseBack) {
  const auto p = run({"compute", file("g.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n3 4\n"), "--format", "json"})
                     .parsed()["payload"];
  for (const char* key : {"L", "C_WS"}) {
    const Rational r = Rational::parse(p[key].get<std::string>());
    EXPECT_EQ(r.to_string(), p[key].get<std::string>());
  }
  for (const char* key : {"local_clustering", "closeness", "radiality"}) {
    for (const auto& v : p[key]) {
      EXPECT_EQ(Rational::parse(v.get<std::string>()).to_string(), v.get<std::string>());
    }
  }
}

TEST_F(CliTest, ComputeTextFormat) {
  const auto r = run({"compute", file("star.txt", kStar)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3/2"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"compute", file("bad.txt", "0 1\n1 x\n")}).code, 2);
  EXPECT_EQ(run({"compute", file("loop.txt", "0 0\n")}).code, 2);
  EXPECT_EQ(run({"compute", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({"compute", file("split.txt", "0 1\n2 3\n")}).code, 3);
  EXPECT_EQ(run({"check", file("split2.txt", "n 3\n0 1\n"), "--relations", "R1"}).code, 3);
  EXPECT_EQ(run({"check", file("c4.txt", kC4), "--relations", "R99"}).code, 2);
  EXPECT_EQ(run({"mine"}).code, 2);
  EXPECT_EQ(run({"mine", "--n-max", "4", "--model", "gnp", "--trials", "3"}).code, 2);
  EXPECT_EQ(run({"mine", "--n-max", "9"}).code, 2);
  EXPECT_EQ(run({"mine", "--model", "gnp", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"gen", "--model", "cycle", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "--model", "nope", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"compute", file("c4b.txt", kC4), "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

std::vector<json> results(const Run& r) { return r.parsed()["payload"]["results"].get<std::vector<json>>(); }

TEST_F(CliTest, CheckExamples) {
  const auto c4 = file("c4.txt", kC4);
  const auto r11 = run({"check", c4, "--relations", "R11", "--format", "json"});
  EXPECT_EQ(r11.code, 0);
  ASSERT_EQ(results(r11).size(), 1u);
  EXPECT_EQ(results(r11)[0]["status"], "equality");

  const auto r10 = run({"check", c4, "--relations", "R10", "--format", "json"});
  EXPECT_EQ(r10.code, 0);
  EXPECT_EQ(results(r10)[0]["status"], "skipped-precondition");

  const auto r12 = run({"check", file("star.txt", kStar), "--relations", "R12", "--format", "json"});
  EXPECT_EQ(r12.code, 0);
  const auto res = results(r12)[0];
  EXPECT_EQ(res["status"], "violated");
  EXPECT_EQ(res["audit_flag"], true);
  EXPECT_EQ(res["lhs"], "1/1");
  EXPECT_EQ(res["rhs"], "13/16");
  EXPECT_EQ(r12.parsed()["payload"]["audit_violations"], 1);
  EXPECT_EQ(r12.parsed()["payload"]["non_audit_violations"], 0);
}

TEST_F(CliTest, CheckAllKeepsCatalogOrder) {
  const auto c4 = file("c4.txt", kC4);
  const auto a = run({"check", c4, "--relations", "R8,R1", "--format", "json"});
  const auto b = run({"check", c4, "--relations", "R1,R8", "--format", "json"});
  EXPECT_EQ(a.parsed()["payload"], b.parsed()["payload"]);
  EXPECT_EQ(results(a).front()["relation"], "R1");
  EXPECT_EQ(results(a).back()["relation"], "R8");
  EXPECT_EQ(run({"check", c4, "--relations", "all"}).code, 0);
}

TEST_F(CliTest, MineExhaustive) {
  const auto r = run({"mine", "--n-max", "5", "--relations", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto p = r.parsed()["payload"];
  EXPECT_EQ(p["graphs_evaluated"], 771);
  EXPECT_EQ(p["non_audit_violations"], 0);
  EXPECT_EQ(p["ok"], true);
  EXPECT_FALSE(p.contains("duration_seconds"));

  const auto r12 = run({"mine", "--n-max", "4", "--relations", "R12", "--format", "json"});
  EXPECT_EQ(r12.code, 0);
  EXPECT_GT(r12.parsed()["payload"]["audit_violations"].get<int>(), 0);
}

TEST_F(CliTest, MineIsByteIdentical) {
  const std::vector<std::string> args{"mine", "--model", "gnp", "--n", "9", "--p", "0.4",
                                      "--trials", "10", "--seed", "7", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);

  const auto one = run({"mine", "--n-max", "5", "--workers", "1", "--format", "json"});
  const auto three = run({"mine", "--n-max", "5", "--workers", "3", "--format", "json"});
  // The command echo differs; the payload must not.
  EXPECT_EQ(one.parsed()["payload"].dump(), three.parsed()["payload"].dump());
  EXPECT_EQ(three.out, run({"mine", "--n-max", "5", "--workers", "3", "--format", "json"}).out);
}

TEST_F(CliTest, MineTimingIsOptIn) {
  const auto r = run({"mine", "--n-max", "3", "--timing", "--format", "json"});
  EXPECT_TRUE(r.parsed()["payload"].contains("duration_seconds"));
}

TEST_F(CliTest, GenModels) {
  EXPECT_EQ(run({"gen", "--model", "star", "--leaves", "3"}).out, kStar);
  const auto cycle = run({"gen", "--model", "cycle", "--n", "5"}).out;
  EXPECT_EQ(cycle, "0 1\n0 4\n1 2\n2 3\n3 4\n");

  const auto ws = run({"gen", "--model", "watts_strogatz", "--n", "10", "--k", "4", "--p", "0", "--seed", "1"});
  ASSERT_EQ(ws.code, 0);
  const Graph g = parse_edge_list(ws.out);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 4u);
  EXPECT_EQ(serialize_edge_list(g), ws.out);

  const auto gnp = std::vector<std::string>{"gen", "--model", "gnp", "--n", "12", "--p", "0.3", "--seed", "5"};
  EXPECT_EQ(run(gnp).out, run(gnp).out);
}

TEST_F(CliTest, GenComputePipelineOnStar) {
  const auto out = path("star.txt");
  ASSERT_EQ(run({"gen", "--model", "star", "--leaves", "3", "-o", out}).code, 0);
  const auto p = run({"compute", out, "--format", "json"}).parsed()["payload"];
  EXPECT_EQ(p["n"], 4);
  EXPECT_EQ(p["L"], "3/2");
  EXPECT_EQ(p["C_WS"], "0/1");
  EXPECT_EQ(p["stress"][0], 6);
  EXPECT_EQ(p["geodetic"], true);
  EXPECT_EQ(p["local_clustering"][0], "0/1");
  EXPECT_EQ(p["pendant"], json::array({false, true, true, true}));
}

}  // namespace
}  // namespace aspl
