#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/synthetic_panel.hpp"
#include "tadda/panel_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TADDA_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tadda_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, Score) {
  EXPECT_EQ(run("score tadda1_l1 --eps 0.048 --yhat 0 --y 0.7").out, "0.700000\n");
  EXPECT_EQ(run("score tadda1_l1 --eps 0.048 --yhat 0.06 --y -0.10").out, "0.172000\n");
  EXPECT_EQ(run("score se --yhat -0.2 --y 0.3").out, "0.250000\n");
  EXPECT_EQ(run("score crps --yhat 0 --y 1").code, 2);
  EXPECT_EQ(run("score se --yhat abc --y 1").code, 2);
  EXPECT_EQ(run("score se --yhat 0").code, 2);
}

TEST(Cli, Opf) {
  const auto r = run("opf --skew-normal -0.15 0.4 8 --score tadda1_l1 --eps 0.048");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.059184 high-confidence-positive\n");
  EXPECT_EQ(run("opf --atoms 0,0,0 --score ae").out.substr(0, 8), "0.000000");
  EXPECT_EQ(run("opf --atoms -1,0,1 --score tadda2_l1 --eps 0.048").code, 0);
  EXPECT_EQ(run("opf --score ae").code, 2);
  EXPECT_EQ(run("opf --skew-normal 0 -1 0 --score ae").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("score --help").code, 0);
}

TEST(Cli, SimulateIsDeterministic) {
  const auto a = scratch("sim_a"), b = scratch("sim_b");
  ASSERT_EQ(run("--out " + a.string() + " simulate --mc-samples 100000").code, 0);
  ASSERT_EQ(run("simulate --mc-samples 100000 --out " + b.string()).code, 0);
  for (const char* f : {"simulation_functionals.csv", "simulation_scores.csv", "simulation.md"}) {
    EXPECT_FALSE(slurp(a / f).empty()) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  const auto c = scratch("sim_c");
  ASSERT_EQ(run("simulate --alpha 0 --xi 0 --mc-samples 100000 --out " + c.string()).code, 0);
  const auto text = slurp(c / "simulation_functionals.csv");
  const auto at = text.find("ae,median,");
  ASSERT_NE(at, std::string::npos) << text;
  EXPECT_NEAR(std::stod(text.substr(at + 10)), 0.0, 1e-9) << text;
}

TEST(Cli, EvaluateAndCalibrate) {
  const auto dir = scratch("eval");
  {
    std::ofstream out(dir / "panel.csv");
    tadda::write_panel(out, tadda::testing::constant_panel(3, 380, 480, 4));
  }
  const auto outdir = dir / "out";
  const auto r = run("evaluate --panel " + (dir / "panel.csv").string() + " --out " + outdir.string());
  ASSERT_EQ(r.code, 0) << r.out;
  for (const char* f : {"evaluation.csv", "evaluation.md", "quantiles.csv", "quantiles.md", "zero_shares.csv",
                        "forecasts.csv", "targets.csv"}) {
    EXPECT_TRUE(fs::exists(outdir / f)) << f;
  }
  const auto csv = slurp(outdir / "evaluation.csv");
  EXPECT_NE(csv.find("mean,\"se\",0,0,0,0,0,0,0"), std::string::npos) << csv;

  const auto cal = run("calibrate --panel " + (dir / "panel.csv").string() + " --out " + outdir.string());
  ASSERT_EQ(cal.code, 0) << cal.out;
  EXPECT_NE(cal.out.find("best window: 2"), std::string::npos) << cal.out;
  EXPECT_TRUE(fs::exists(outdir / "calibration.csv"));
}

TEST(Cli, EvaluateReportsGaps) {
  const auto dir = scratch("gap");
  {
    std::ofstream out(dir / "panel.csv");
    out << "country_id,month_id,fatalities\n";
    for (int m = 380; m <= 480; ++m) {
      out << "AAA," << m << ",1\n";
      if (m != 450) out << "BBB," << m << ",2\n";
    }
  }
  const auto r = run("evaluate --panel " + (dir / "panel.csv").string() + " --out " + (dir / "out").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(BBB, 450)"), std::string::npos) << r.out;
  EXPECT_EQ(run("evaluate --panel " + (dir / "missing.csv").string()).code, 1);
  EXPECT_EQ(run("evaluate").code, 2);
}

TEST(Cli, ConfigFile) {
  const auto dir = scratch("config");
  {
    std::ofstream out(dir / "bad.json");
    out << R"({"bogus": 1})";
  }
  EXPECT_EQ(run("--config " + (dir / "bad.json").string() + " simulate").code, 2);
  {
    std::ofstream out(dir / "ok.json");
    out << R"({"mc_samples": 50000, "seed": 3, "out_dir": ")" << (dir / "o").string() << R"("})";
  }
  EXPECT_EQ(run("--config " + (dir / "ok.json").string() + " simulate").code, 0);
  EXPECT_NE(slurp(dir / "o" / "simulation.md").find("50000 Monte Carlo draws, seed 3"), std::string::npos);
}
