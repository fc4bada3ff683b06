#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ftop/cli.hpp"

using namespace ftop;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FTOP_DATA_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, CheckHolds) {
  const CliRun r = run({"check", "--claim", "thm4", "-n", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(Cli, CheckJson) {
  const CliRun r = run({"check", "--claim", "thm51", "-n", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["claim"], "thm51");
  EXPECT_EQ(doc["n_max"], 2);
  EXPECT_EQ(doc["verdict"], "holds");
  EXPECT_TRUE(doc["witness"].is_null());
}

TEST(Cli, SearchFindsWitness) {
  const CliRun r = run({"search", "--hypo", "contra_semicontinuous", "--not", "contra_continuous",
                     "-n", "3"});
  ASSERT_EQ(r.code, 1) << r.err;
  const Json doc = Json::parse(r.out);
  const Witness w = load_witness(doc["witness"]);
  EXPECT_TRUE(w.has_map());
  ImplicationQuery q;
  q.map_hypotheses = {MapClassId::contra_semicontinuous};
  q.conclusion = MapClassId::contra_continuous;
  EXPECT_TRUE(witness_violates(q, w));
}

TEST(Cli, SearchWithSeveralHypotheses) {
  const CliRun r = run({"search", "--hypo", "contra_continuous,domain:connected,codomain:t1",
                     "--not", "constant", "-n", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["witness"].is_null());
}

TEST(Cli, ClassifyMap) {
  const CliRun r = run({"classify", "--space", data("e3tau.json"), "--map", data("id3.json"),
                     "--codomain", data("e3sigma.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("contra_continuous:        true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sr_continuous:            false"), std::string::npos) << r.out;
}

TEST(Cli, ClassifySpace) {
  const CliRun r = run({"classify", "--space", data("sierpinski.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("semi_open:                {{}, {a}, {a,b}}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("hyperconnected:           true"), std::string::npos) << r.out;
}

TEST(Cli, Dsl) {
  const CliRun eval = run({"dsl", "--defs", data("builtin_classes.ftl"), "--eval-space",
                        data("sierpinski.json")});
  ASSERT_EQ(eval.code, 0) << eval.err;
  EXPECT_NE(eval.out.find("semi_open:                {{}, {a}, {a,b}}"), std::string::npos);
  const CliRun check = run({"dsl", "--defs", data("builtin_classes.ftl"), "--check-against-builtin",
                         "-n", "2"});
  EXPECT_EQ(check.code, 0) << check.out;
  EXPECT_NE(check.out.find("agrees"), std::string::npos);
}

TEST(Cli, EnumerateWritesDeterministicCatalog) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "ftop_cli_cat_a.txt";
  const auto b = dir / "ftop_cli_cat_b.txt";
  ASSERT_EQ(run({"enumerate", "-n", "2", "--catalog", a.string()}).code, 0);
  ASSERT_EQ(run({"enumerate", "-n", "2", "--catalog", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(read_catalog(a.string()).records.size(), 4U);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  const CliRun r = run({"enumerate", "-n", "1"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "ftop-catalog v1 n=1 records=1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--claim", "thm4"}).code, 2);
  EXPECT_EQ(run({"check", "--claim", "nope", "-n", "2"}).code, 2);
  EXPECT_EQ(run({"check", "--claim", "thm4", "-n", "9"}).code, 2);
  EXPECT_EQ(run({"enumerate", "-n", "5"}).code, 2);
  EXPECT_EQ(run({"search", "--hypo", "bogus", "--not", "r_map", "-n", "2"}).code, 2);
  EXPECT_EQ(run({"search", "--hypo", "r_map", "--not", "r_map", "-n", "2"}).code, 2);
  EXPECT_EQ(run({"classify", "--space", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"classify", "--space", data("e3tau.json"), "--map", data("id3.json")}).code, 2);
  EXPECT_EQ(run({"dsl", "--defs", data("builtin_classes.ftl")}).code, 2);
  const CliRun r = run({"dsl", "--defs", data("e3tau.json"), "--check-against-builtin"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos) << r.err;
}

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  const std::string cli = FTOP_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status(cli + " check --claim thm1 -n 2"), 0);
  EXPECT_EQ(status(cli + " search --hypo b_continuous --not contra_semicontinuous -n 2"), 1);
  EXPECT_EQ(status(cli + " nonsense"), 2);
}
