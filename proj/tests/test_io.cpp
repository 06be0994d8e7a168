#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "support/synthetic_panel.hpp"
#include "tadda/errors.hpp"
#include "tadda/panel_io.hpp"
#include "tadda/report.hpp"
#include "tadda/run_config.hpp"

using namespace tadda;

namespace {

Panel parse(const std::string& text) {
  std::istringstream in(text);
  return read_panel(in);
}

std::string data_error(const std::string& text) {
  try {
    parse(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(PanelIo, ReadsUnorderedRowsWithCrlfAndBom) {
  const auto p = parse("\xEF\xBB\xBF" "country_id,month_id,fatalities\r\nB,2,5\r\nA,1,0\r\nB,1,3\r\nA,2,7\r\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].country_id, "A");
  EXPECT_EQ(p[0].first_month, 1);
  EXPECT_EQ(p[0].fatalities, (std::vector<std::int64_t>{0, 7}));
  EXPECT_EQ(p[1].fatalities, (std::vector<std::int64_t>{3, 5}));
}

TEST(PanelIo, RoundTrip) {
  const auto panel = tadda::testing::synthetic_count_panel(4, 10, 40, 1);
  std::stringstream buf;
  write_panel(buf, panel);
  const auto back = read_panel(buf);
  ASSERT_EQ(back.size(), panel.size());
  for (std::size_t i = 0; i < panel.size(); ++i) {
    EXPECT_EQ(back[i].country_id, panel[i].country_id);
    EXPECT_EQ(back[i].first_month, panel[i].first_month);
    EXPECT_EQ(back[i].fatalities, panel[i].fatalities);
  }
}

TEST(PanelIo, RejectsBadInput) {
  EXPECT_NE(data_error("country,month,deaths\nA,1,0\n"), "");
  EXPECT_NE(data_error("country_id,month_id,fatalities\nA,1,-3\n").find("line 2"), std::string::npos);
  EXPECT_NE(data_error("country_id,month_id,fatalities\nA,1,2.5\n"), "");
  EXPECT_NE(data_error("country_id,month_id,fatalities\nA,1,x\n"), "");
  EXPECT_NE(data_error("country_id,month_id,fatalities\nA,1,2\nA,1,3\n").find("duplicate"), std::string::npos);
  EXPECT_NE(data_error("country_id,month_id,fatalities\nA,1,2\nA,2\n"), "");
  EXPECT_NE(data_error("country_id,month_id,fatalities\n"), "");
}

TEST(PanelIo, GapIsNamed) {
  const auto msg = data_error("country_id,month_id,fatalities\nA,1,0\nA,2,0\nA,3,0\nB,1,0\nB,3,0\n");
  EXPECT_NE(msg.find("(B, 2)"), std::string::npos) << msg;
}

TEST(RunConfig, DefaultsAndOverrides) {
  const auto c = parse_run_config(R"({
    // comments are allowed
    "seed": 7,
    "mc_samples": 1000,
    "test_period": ["2017-01", 480],
    "window": "calibrate",
    "scores": ["se", "tadda1_l1"],
    "epsilon": 0.1,
    "functionals": ["mean", "no_change"],
    "skew_normal": {"xi": 0, "omega": 1, "alpha": 2}
  })");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.mc_samples, 1000u);
  EXPECT_EQ(c.evaluation.test_period, (MonthRange{445, 480}));
  EXPECT_FALSE(c.evaluation.window.has_value());
  EXPECT_EQ(c.evaluation.scores[1], ScoreSpec::tadda1_l1(0.1));
  EXPECT_EQ(c.evaluation.functionals.size(), 2u);
  EXPECT_EQ(c.skew_normal.alpha, 2.0);
  const auto d = parse_run_config("{}");
  EXPECT_EQ(d.evaluation.window, 9);
  EXPECT_EQ(d.evaluation.calibration_period, (MonthRange{409, 444}));
}

TEST(RunConfig, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse_run_config(R"({"windw": 9})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config(R"({"window": 0})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config(R"({"lead_times": [2, 20]})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config(R"({"epsilon": -1})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config(R"({"skew_normal": {"omega": 0}})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config(R"({"seed": "x"})"), std::invalid_argument);
  EXPECT_THROW(parse_run_config("{"), std::invalid_argument);
}

TEST(RunConfig, ParseMonth) {
  EXPECT_EQ(parse_month("2017-01"), 445);
  EXPECT_EQ(parse_month("445"), 445);
  EXPECT_THROW(parse_month("2017-13"), std::invalid_argument);
  EXPECT_THROW(parse_month("jan"), std::invalid_argument);
}

TEST(Report, FormatHelpers) {
  EXPECT_EQ(format_fixed(-0.0001, 3), "0.000");
  EXPECT_EQ(format_fixed(0.1235, 2), "0.12");
  EXPECT_EQ(format_full(0.1), "0.1");
}

TEST(Report, EvaluationCsvColumnOrder) {
  const auto panel = tadda::testing::synthetic_count_panel(3, 150, 259, 2);
  EvaluationConfig c;
  c.calibration_period = {200, 229};
  c.test_period = {230, 259};
  c.lead_times = {5, 2};
  const auto t = run_evaluation(panel, c);
  std::ostringstream out;
  write_evaluation_csv(out, t);
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "functional,score,lead_2,lead_5,grand_mean");
  EXPECT_NE(text.find("opf_tadda1_l1,\"tadda1_l1(eps=0.048)\","), std::string::npos);
}

TEST(Report, ReferenceRowsOnlyForPublishedSetup) {
  const auto panel = tadda::testing::synthetic_count_panel(3, 380, 480, 2);
  const auto t = run_evaluation(panel, EvaluationConfig{});
  std::ostringstream with, without;
  write_evaluation_markdown(with, t, true);
  write_evaluation_markdown(without, t, false);
  EXPECT_NE(with.str().find("views_ensemble*"), std::string::npos);
  EXPECT_NE(with.str().find("0.385"), std::string::npos);
  EXPECT_EQ(without.str().find("views_ensemble"), std::string::npos);
}
