#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "sjt/constructions.hpp"
#include "sjt/module_io.hpp"
#include "support/oracle.hpp"

namespace {

namespace fs = std::filesystem;
namespace cli = sjt::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SJT_FIXTURE_DIR) + "/" + name + ".json"; }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sjt_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST(Cli, ValidateFixture) {
  auto r = run({"validate", fixture("k0")});
  EXPECT_EQ(r.code, cli::kExitTrue);
  EXPECT_NE(r.out.find("valid"), std::string::npos);
}

TEST(Cli, JordanTypeAtSumPoint) {
  auto r = run({"jordan-type", fixture("ex3_sum"), "--point", "x1+y1"});
  EXPECT_EQ(r.code, cli::kExitTrue);
  EXPECT_EQ(r.out, "(0|0)[1] + 4[2]\n");
}

TEST(Cli, CheckCjtExampleOne) {
  auto weak = run({"check-cjt", fixture("k0_plus_dualk0"), "--cone", "weak", "--method", "certify"});
  EXPECT_EQ(weak.code, cli::kExitTrue);
  EXPECT_NE(weak.out.find("jordan type: (1|1)[1] + 1[2]"), std::string::npos);
  auto strong = run({"check-cjt", fixture("k0_plus_dualk0"), "--cone", "strong", "--method", "certify"});
  EXPECT_EQ(strong.code, cli::kExitFalse);
  EXPECT_NE(strong.out.find("witness: x1 -> (1|1)[1] + 1[2]"), std::string::npos);
  EXPECT_NE(strong.out.find("witness: x1 + y1 -> (0|0)[1] + 2[2]"), std::string::npos);
}

TEST(Cli, CheckCjtSampled) {
  auto r = run({"check-cjt", fixture("w4"), "--cone", "strong", "--method", "sample", "--samples", "30", "--seed", "3"});
  EXPECT_EQ(r.code, cli::kExitTrue);
  EXPECT_NE(r.out.find("probabilistic"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check-cjt", fixture("k0"), "--cone", "diagonal"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"jordan-type", fixture("k0"), "--point", "x1 +"}).code, cli::kExitParse);
  EXPECT_EQ(run({"jordan-type", fixture("k0"), "--point", "q7"}).code, cli::kExitParse);
  EXPECT_EQ(run({"jordan-type", fixture("k0"), "--point", "0*x1"}).code, cli::kExitParse);
  EXPECT_EQ(run({"validate", fixture("does_not_exist")}).code, cli::kExitValidation);
  EXPECT_EQ(run({"construct", "tensor(kac0,"}).code, cli::kExitParse);
  EXPECT_EQ(run({"bundle", fixture("w3"), "--window", "0..9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"restrict", fixture("k0"), "--generators", "x1,y1"}).code, cli::kExitUsage);
}

TEST(Cli, BooleanCommands) {
  EXPECT_EQ(run({"projective", fixture("free_ext2")}).code, cli::kExitTrue);
  EXPECT_EQ(run({"projective", fixture("k0")}).code, cli::kExitFalse);
  EXPECT_EQ(run({"endotrivial", fixture("omega_ext2_2")}).code, cli::kExitTrue);
  EXPECT_EQ(run({"endotrivial", fixture("free_ext2")}).code, cli::kExitFalse);
  EXPECT_EQ(run({"indecomposable", fixture("ex3_m")}).code, cli::kExitTrue);
  EXPECT_EQ(run({"indecomposable", fixture("k0_plus_dualk0")}).code, cli::kExitFalse);
}

TEST(Cli, BundleCommand) {
  auto r = run({"bundle", fixture("w3"), "--fibers", "20", "--window", "0..2"});
  EXPECT_EQ(r.code, cli::kExitTrue);
  EXPECT_NE(r.out.find("F1 rank (1|0), F2 rank 2"), std::string::npos);
  EXPECT_NE(r.out.find("degree 2:"), std::string::npos);
  EXPECT_EQ(run({"bundle", fixture("k0")}).code, cli::kExitFalse);
}

TEST(Cli, GlobalLimits) {
  auto r = run({"--max-minors", "5", "check-cjt", fixture("omega_ext2_3"), "--cone", "strong"});
  EXPECT_EQ(r.code, cli::kExitTrue);
}

TEST(Cli, JsonReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-cjt", fixture("ex2_sum"), "--cone", "weak", "--json"},
           {"check-cjt", fixture("k0_plus_dualk0"), "--cone", "strong", "--json"},
           {"check-cjt", fixture("w5"), "--cone", "strong", "--method", "sample", "--seed", "17", "--json"},
           {"bundle", fixture("omega_ext2_2"), "--window", "0..3", "--json"},
           {"endotrivial", fixture("omega_ext2_-1"), "--json"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["format"], cli::kReportFormat);
    EXPECT_EQ(j["tool_version"], cli::kToolVersion);
  }
}

TEST(Cli, JsonCheckCjtFields) {
  auto r = run({"check-cjt", fixture("k0_plus_dualk0"), "--cone", "weak", "--json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "constant");
  EXPECT_EQ(j["jordan_type"]["a_ev"], 1);
  EXPECT_EQ(j["jordan_type"]["a_od"], 1);
  EXPECT_EQ(j["jordan_type"]["a2"], 1);
  EXPECT_EQ(j["strata"].size(), 2u);
  EXPECT_TRUE(j["strata"][0].contains("generic_rank"));
  EXPECT_FALSE(j["probabilistic"].get<bool>());
}

TEST_F(CliFiles, ConstructAndValidate) {
  auto out = path("t.json");
  auto r = run({"construct", "tensor(kac0, dual(kac0))", "-o", out});
  ASSERT_EQ(r.code, cli::kExitTrue);
  EXPECT_EQ(sjt::read_module_file(out), sjt::tensor(sjt::kac0(), sjt::dual(sjt::kac0())));
  EXPECT_EQ(run({"validate", out}).code, cli::kExitTrue);
  auto s = run({"construct", "omega(trivial(ev), 2)", "--algebra", "exterior(2)"});
  EXPECT_EQ(s.code, cli::kExitTrue);
  EXPECT_EQ(sjt::parse_module(s.out), oracle::load("omega_ext2_2"));
}

TEST_F(CliFiles, Restrict) {
  auto out = path("r.json");
  ASSERT_EQ(run({"restrict", fixture("omega_ext4_1"), "--generators", "z1,z2", "-o", out}).code, cli::kExitTrue);
  auto m = sjt::read_module_file(out);
  EXPECT_EQ(m.algebra(), sjt::AlgebraSpec::exterior(2));
  EXPECT_EQ(m.dim(), 15u);
}

TEST_F(CliFiles, InvalidModuleFile) {
  auto bad = path("bad.json");
  {
    std::ofstream f(bad);
    f << R"json({"format": "sjt-module/1", "algebra": "exterior(1)", "dim": 3, "parity": ["ev", "od", "ev"],
             "actions": {"z1": [[1, 0, "1"], [2, 1, "1"]]}})json";
  }
  auto v = run({"validate", bad});
  EXPECT_EQ(v.code, cli::kExitValidation);
  EXPECT_NE(v.out.find("z1"), std::string::npos);
  EXPECT_EQ(run({"check-cjt", bad}).code, cli::kExitValidation);
  auto range = path("range.json");
  {
    std::ofstream f(range);
    f << R"json({"format": "sjt-module/1", "algebra": "sl11", "dim": 2, "parity": ["ev", "od"],
             "actions": {"y1": [[5, 0, "1"]]}})json";
  }
  EXPECT_EQ(run({"validate", range}).code, cli::kExitParse);
}

}  // namespace
