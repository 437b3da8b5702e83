#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "locyc/errors.hpp"
#include "locyc/harness/acceptance.hpp"
#include "locyc/harness/cli.hpp"
#include "locyc/harness/commands.hpp"
#include "locyc/harness/config.hpp"
#include "locyc/harness/serialize.hpp"

namespace locyc::harness {
namespace {

namespace fs = std::filesystem;

class Workdir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("locyc-test-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  struct Run {
    int code;
    std::string out;
    std::string err;
  };
  Run cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }
  static Json first_record(const std::string& out) { return Json::parse(out.substr(0, out.find('\n'))); }

  fs::path dir_;
};

const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

TEST(Config, TextRoundTrip) {
  ExperimentConfig config("game mb");
  config.set("n", "2000");
  config.set("eps", "0.5");
  config.set("breaker", "greedy-degree");
  config.set("out", "/tmp/some path.json");
  EXPECT_EQ(ExperimentConfig::parse(config.to_text()), config);
  EXPECT_EQ(ExperimentConfig::from_json(config.to_json()), config);
}

TEST(Config, ParsingAndTypedGetters) {
  const auto config = ExperimentConfig::parse("# run\ncommand = extract\nk = 4\nc1 = 3/2\n\nc2=1.2\nsizes = 1, 2,3\n");
  EXPECT_EQ(config.command(), "extract");
  EXPECT_EQ(config.size("k"), 4u);
  EXPECT_EQ(config.rational("c1"), Rational(3, 2));
  EXPECT_EQ(config.rational("c2"), Rational(6, 5));
  EXPECT_DOUBLE_EQ(config.real("c1"), 1.5);
  EXPECT_EQ(config.size_list("sizes"), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(config.size("missing", 9), 9u);
  EXPECT_THROW(config.size("missing"), InputError);
  EXPECT_THROW(config.size("c1"), InputError);
  EXPECT_THROW(ExperimentConfig::parse("no equals sign here"), InputError);
}

TEST(Serialize, DigestIsSha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(Workdir, ExtractOnCompleteGraph) {
  const auto graph = write("k4.txt", kK4);
  const auto cert = (dir_ / "cert.json").string();
  const auto r = cli({"extract", "--mode", "expander", "--k", "1", "--graph", graph, "--out", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto record = first_record(r.out);
  EXPECT_EQ(record["payload"]["certificate"]["length"], 4);
  EXPECT_EQ(record["payload"]["validated"], true);
  EXPECT_EQ(record["config"]["params"]["graph"], graph);
  std::ifstream in(cert);
  EXPECT_EQ(Json::parse(in)["length"], 4);
}

TEST_F(Workdir, MalformedEdgeListIsAnInputError) {
  const auto graph = write("bad.txt", "3 2\n0 1\n1 q\n");
  const auto r = cli({"extract", "--k", "1", "--graph", graph});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(Workdir, DenseAuditFailsTheHypothesis) {
  const auto graph = write("k4.txt", kK4);
  const auto r = cli({"audit", "--graph", graph, "--c2", "1.2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_record(r.out)["status"], "hypothesis-failure");
}

TEST_F(Workdir, UnknownFlagsAndSuites) {
  const auto flag = cli({"extract", "--frobnicate", "3"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_NE(flag.err.find("Usage"), std::string::npos);
  EXPECT_EQ(cli({"reproduce", "--suite", "nightly"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST_F(Workdir, ConfigFileWithFlagOverride) {
  const auto graph = write("k4.txt", kK4);
  const auto config = write("run.cfg", "command = extract\nmode = expander\nk = 4\ngraph = " + graph + "\n");
  const auto r = cli({"--config", config, "extract", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(first_record(r.out)["config"]["params"]["k"], "1");
  const auto from_file = cli({"--config", config});
  EXPECT_EQ(from_file.code, 1);  // k = 4 is not below |V|
}

TEST_F(Workdir, GnpWritesGraphAndRecordsAppend) {
  const auto graph = (dir_ / "g.txt").string();
  const auto records = (dir_ / "runs.jsonl").string();
  for (int i = 0; i < 2; ++i) {
    const auto r = cli({"--records", records, "gnp", "--n", "50", "--p", "0.1", "--seed", "4", "--out", graph});
    ASSERT_EQ(r.code, 0) << r.err;
  }
  std::ifstream in(records);
  std::string a;
  std::string b;
  std::getline(in, a);
  std::getline(in, b);
  EXPECT_EQ(Json::parse(a)["payload"], Json::parse(b)["payload"]);
  EXPECT_EQ(Json::parse(a)["payload"]["graph"]["sha256"].get<std::string>().size(), 64u);
  const auto dfs = cli({"dfs", "--graph", graph, "--order", "seed:3"});
  EXPECT_EQ(dfs.code, 0) << dfs.err;
  const auto check = cli({"reproduce", "--record", records});
  EXPECT_EQ(check.code, 0) << check.out;
}

TEST_F(Workdir, SeedFromEnvironment) {
  ::setenv("LOCYC_SEED", "17", 1);
  const auto r = cli({"gnp", "--n", "20", "--p", "0.5"});
  ::unsetenv("LOCYC_SEED");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_record(r.out)["config"]["params"]["seed"], "17");
}

TEST_F(Workdir, RamseyAndGameCommands) {
  const auto cycle = write("c20.txt", [] {
    std::string s = "20 20\n";
    for (int i = 0; i < 20; ++i) s += std::to_string(std::min(i, (i + 1) % 20)) + " " + std::to_string(std::max(i, (i + 1) % 20)) + "\n";
    return s;
  }());
  const auto lower = cli({"ramsey", "lower", "--r", "4", "--n-target", "20", "--graph", cycle, "--seed", "1"});
  EXPECT_EQ(lower.code, 0) << lower.err;
  EXPECT_EQ(first_record(lower.out)["validation"]["confinement"], "ok");
  const auto vacuous = cli({"ramsey", "upper", "--n", "1000", "--r", "2", "--C", "6", "--colorings", "uniform"});
  EXPECT_NE(vacuous.code, 2) << vacuous.err;

  const auto transcript = (dir_ / "t.jsonl").string();
  const auto mb = cli({"game", "mb", "--n", "300", "--eps", "0.5", "--seed", "2", "--k-floor", "6", "--transcript", transcript});
  EXPECT_NE(mb.code, 2) << mb.err;
  std::ifstream in(transcript);
  std::string line;
  std::getline(in, line);
  const auto entry = Json::parse(line);
  EXPECT_EQ(entry["round"], 1);
  EXPECT_EQ(entry["actor"], "maker");
  const auto cw = cli({"game", "criterion", "--which", "cw", "--b", "2", "--family", "3,3"});
  EXPECT_EQ(cw.code, 0);
  const auto bad = cli({"game", "mb", "--n", "100", "--eps", "0.5", "--breaker", "oracle"});
  EXPECT_EQ(bad.code, 2);
}

TEST(Acceptance, SuitesAndNames) {
  EXPECT_EQ(suite_criteria("acceptance").size(), 14u);
  EXPECT_THROW(suite_criteria("nightly"), InputError);
  for (int id = 1; id <= kCriterionCount; ++id) EXPECT_FALSE(criterion_name(id).empty());
}

TEST(Acceptance, CriterionPayloadsRepeat) {
  for (int id : {1, 2, 8, 13}) {
    const auto a = run_criterion(id, 5);
    EXPECT_EQ(a["id"], id);
    EXPECT_EQ(a.dump(), run_criterion(id, 5).dump());
  }
}

TEST(Acceptance, SmokeSuiteIsQuick) {
  const auto start = std::chrono::steady_clock::now();
  const auto summary = run_suite("smoke", 0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 60.0);
  ASSERT_FALSE(summary.lines.empty());
  EXPECT_EQ(summary.lines.back().id, kCriterionCount);
  EXPECT_EQ(summary.lines.back().verdict, "PASS") << summary.lines.back().detail;
}

}  // namespace
}  // namespace locyc::harness
