#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tadda/distributions.hpp"
#include "tadda/forecaster.hpp"
#include "tadda/opf.hpp"
#include "tadda/scores.hpp"

namespace tadda {

using Panel = std::vector<FatalitySeries>;

// Inclusive range of integer month ids.
struct MonthRange {
  int start = 0;
  int end = 0;

  int size() const { return end - start + 1; }
  friend bool operator==(const MonthRange&, const MonthRange&) = default;
};

// Month id with 1 = January 1980, the numbering of the public country-month panel.
int month_id(int year, int month);
std::pair<int, int> year_month(int month_id);

struct EvaluationConfig {
  MonthRange calibration_period{month_id(2014, 1), month_id(2016, 12)};
  MonthRange test_period{month_id(2017, 1), month_id(2019, 12)};
  std::vector<int> lead_times{2, 3, 4, 5, 6, 7};
  // Empty means "calibrate on the calibration period".
  std::optional<int> window = 9;
  double epsilon = kDefaultEpsilon;
  std::vector<ScoreSpec> scores{ScoreSpec::se(), ScoreSpec::tadda1_l1()};
  std::vector<Functional> functionals{Functional::Mean, Functional::OpfTadda1L1, Functional::NoChange};
};

// Throws std::invalid_argument on overlapping or reversed periods, lead times
// outside 1..12, eps <= 0, or empty score/functional lists.
void validate(const EvaluationConfig& config);

// Throws DataError listing the (country, month) pairs in `required` that the
// panel does not cover (the first 25, plus a count of the rest).
void validate_panel(const Panel& panel, MonthRange required);

// Months the panel must cover to evaluate `period` with the given window.
MonthRange required_months(MonthRange period, std::span<const int> lead_times, int window);

struct ForecastSet {
  std::vector<ForecastRecord> records;   // ordered by (country, month, lead time, functional)
  std::vector<LogChangeTarget> targets;  // ordered by (country, month, lead time)
};

ForecastSet generate_forecasts(const Panel& panel, MonthRange period, std::span<const int> lead_times, int window,
                               double eps, std::span<const Functional> functionals);

struct CellKey {
  Functional functional;
  ScoreSpec score;
  int lead_time;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellStats {
  double mean = 0.0;
  std::size_t n = 0;
};

struct EvaluationTable {
  std::vector<Functional> functionals;
  std::vector<ScoreSpec> scores;
  std::vector<int> lead_times;
  int window = 0;
  std::size_t countries = 0;

  std::map<CellKey, CellStats> cells;
  // Unweighted mean of the per-lead-time cells.
  std::map<std::pair<Functional, ScoreSpec>, double> column_means;

  double cell(Functional f, const ScoreSpec& s, int lead_time) const;
  double grand_mean(Functional f, const ScoreSpec& s) const;
};

EvaluationTable tabulate(const ForecastSet& forecasts, std::span<const Functional> functionals,
                         std::span<const ScoreSpec> scores, std::span<const int> lead_times);

EvaluationTable evaluate_period(const Panel& panel, const EvaluationConfig& config, MonthRange period, int window);

// Evaluates the test period. A config without a window is calibrated first.
EvaluationTable run_evaluation(const Panel& panel, const EvaluationConfig& config);

struct CalibrationResult {
  int best_window = 0;
  std::vector<std::pair<int, double>> objective_by_window;
};

// Grand-mean objective score of the functional tailored to `objective`, over
// the calibration period. Ties go to the smallest window.
CalibrationResult calibrate_window_scores(const Panel& panel, const EvaluationConfig& config,
                                          std::span<const int> candidate_ws, const ScoreSpec& objective);
int calibrate_window(const Panel& panel, const EvaluationConfig& config, std::span<const int> candidate_ws,
                     const ScoreSpec& objective);

struct QuantileSummary {
  std::vector<double> probs;
  std::vector<double> mean_forecasts;
  std::vector<double> opf_tadda_forecasts;
  std::vector<double> true_log_changes;
};

// Type-1 quantiles of the mean forecasts, the TADDA1-L1 OPFs and the realized
// log-changes, pooled across lead times.
QuantileSummary forecast_quantile_summary(std::span<const ForecastRecord> records,
                                          std::span<const LogChangeTarget> targets, std::span<const double> probs);

// Fraction of values with |v| <= tol.
double zero_share(std::span<const double> values, double tol = 0.0);

std::vector<double> forecast_values(std::span<const ForecastRecord> records, Functional f);
std::vector<double> target_values(std::span<const LogChangeTarget> targets);

struct SimulationReport {
  SkewNormalParams params;
  double eps = kDefaultEpsilon;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 0;

  double median = 0.0;
  double mean = 0.0;
  OpfResult opf;
  TailProbabilities tails;

  // Rows: median, mean, OPF TADDA, zero. Columns: AE, SE, TADDA1-L1.
  std::array<std::array<double, 3>, 4> expected{};
};

inline constexpr std::array<const char*, 4> kSimulationRows = {"median", "mean", "opf_tadda", "zero"};
inline constexpr std::array<const char*, 3> kSimulationColumns = {"ae", "se", "tadda"};

SimulationReport simulation_report(const SkewNormalParams& params, double eps, std::size_t mc_samples,
                                   std::uint64_t seed);

}  // namespace tadda
