#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("piezoscan_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    config_ = (dir_ / "scannerA.cfg").string();
    std::ofstream(config_) << fixtures::scanner_a_config;
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = piezoscan::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
  std::string config_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(CliTest, Model) {
  const auto r = run({"model", "--config", config_, "--out", path("model.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("phi_deg=0.53", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("y_max_um=2.28"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F_uN=43.9"), std::string::npos) << r.out;
  const auto csv = lines(read(path("model.csv")));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "phi_deg,y_max_um,x_at_ymax_um,F_uN,R_A_uN,rigidity_Nm2");
  EXPECT_EQ(csv[1].rfind("0.531974242,2.28513075,359.42029,-43.9528235,", 0), 0u) << csv[1];
}

TEST_F(CliTest, ProfileFiveSamples) {
  const auto r = run({"profile", "--config", config_, "--samples", "5", "--out", path("p.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = lines(read(path("p.csv")));
  ASSERT_EQ(csv.size(), 6u);
  EXPECT_EQ(csv[0], "x_um,y_um");
  EXPECT_EQ(csv[1], "0,0");
  EXPECT_EQ(csv[3], "1000,0");
  EXPECT_EQ(csv[5], "2000,0");
}

TEST_F(CliTest, OutputIsByteStable) {
  ASSERT_EQ(run({"profile", "--config", config_, "--samples", "101", "--out", path("a.csv")}).code, 0);
  ASSERT_EQ(run({"profile", "--config", config_, "--samples", "101", "--out", path("b.csv")}).code, 0);
  EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
  ASSERT_EQ(run({"sweep", "--config", config_, "--axis", "voltage", "--from", "0", "--to", "50", "--steps", "11",
                 "--out", path("s1.csv")})
                .code,
            0);
  ASSERT_EQ(run({"sweep", "--config", config_, "--axis", "voltage", "--from", "0", "--to", "50", "--steps", "11",
                 "--threads", "3", "--out", path("s2.csv")})
                .code,
            0);
  EXPECT_EQ(read(path("s1.csv")), read(path("s2.csv")));
}

TEST_F(CliTest, Sweep) {
  const auto r = run({"sweep", "--config", config_, "--axis", "beam_length", "--from", "500e-6", "--to", "850e-6",
                      "--steps", "8", "--out", path("s.csv"), "--optimize", "tilt"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = lines(read(path("s.csv")));
  ASSERT_EQ(csv.size(), 9u);
  EXPECT_EQ(csv[0], "param_name,param_value_si,phi_deg,y_max_um,F_uN,R_A_uN,status");
  EXPECT_EQ(csv[1].rfind("beam_length,0.0005,", 0), 0u) << csv[1];
  EXPECT_NE(r.out.find("optimum beam_length=0.00085"), std::string::npos) << r.out;
}

TEST_F(CliTest, SweepArgumentErrors) {
  auto r = run({"sweep", "--config", config_, "--axis", "height", "--from", "0", "--to", "1", "--steps", "3", "--out",
                path("s.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("config:", 0), 0u) << r.err;
  r = run({"sweep", "--config", config_, "--axis", "voltage", "--from", "5", "--to", "5", "--steps", "3", "--out",
           path("s.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(fs::exists(path("s.csv")));
}

TEST_F(CliTest, Table1) {
  const auto r = run({"table1", "--out", path("t.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = lines(read(path("t.csv")));
  ASSERT_EQ(csv.size(), 4u);
  EXPECT_EQ(csv[1].rfind("beam_length,0.00085,0.531974242,", 0), 0u) << csv[1];
  EXPECT_EQ(csv[3].substr(csv[3].size() - 3), ",ok");
}

TEST_F(CliTest, Verify) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("pzt-5h E_Pa=6.06e+10"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyCoarseGridBreachesTolerance) {
  const auto r = run({"verify", "--nodes", "11"});
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_EQ(r.err.rfind("verify:", 0), 0u) << r.err;
}

TEST_F(CliTest, ConfigErrors) {
  auto r = run({"model", "--config", path("missing.cfg")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("config:", 0), 0u) << r.err;

  std::ofstream(path("bad.cfg")) << "[geometry]\n[geometry]\n";
  r = run({"model", "--config", path("bad.cfg"), "--out", path("m.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(path("m.csv")));

  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"verify", "--nodes", "100"}).code, 1);
  EXPECT_EQ(run({"profile", "--config", config_, "--samples", "1", "--out", path("p.csv")}).code, 1);
}

TEST_F(CliTest, UnwritableOutput) {
  const auto r = run({"table1", "--out", path("nope/t.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("config:", 0), 0u) << r.err;
}

TEST_F(CliTest, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
