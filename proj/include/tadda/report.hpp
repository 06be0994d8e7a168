#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "tadda/evaluation.hpp"

namespace tadda {

// Published ViEWS-ensemble scores for lead times 2..7 (MSE and TADDA with
// eps = 0.048) on the January 2017 - December 2019 country-month task. These
// are external numbers kept only to print next to our own results; nothing
// here recomputes them.
struct ExternalReference {
  static constexpr std::array<int, 6> lead_times = {2, 3, 4, 5, 6, 7};
  static constexpr std::array<double, 6> views_mse = {0.504, 0.551, 0.579, 0.548, 0.573, 0.599};
  static constexpr double views_mse_mean = 0.559;
  static constexpr std::array<double, 6> views_tadda = {0.371, 0.379, 0.394, 0.381, 0.386, 0.400};
  static constexpr double views_tadda_mean = 0.385;
};

// Shortest decimal representation that round-trips.
std::string format_full(double x);
// Fixed notation with the given number of decimals.
std::string format_fixed(double x, int decimals);

// functional,score,lead_<s>...,grand_mean with full-precision values.
void write_evaluation_csv(std::ostream& out, const EvaluationTable& table);
// Aligned markdown table rounded to 3 decimals. With include_reference, the
// ViEWS-ensemble rows are appended (flagged as external) when the table's
// lead times and scores match the published ones.
void write_evaluation_markdown(std::ostream& out, const EvaluationTable& table, bool include_reference);

void write_quantile_summary_csv(std::ostream& out, const QuantileSummary& summary);
void write_quantile_summary_markdown(std::ostream& out, const QuantileSummary& summary);

struct ZeroShares {
  double true_log_changes = 0.0;
  double opf_tadda = 0.0;
  double mean = 0.0;
};
void write_zero_shares_csv(std::ostream& out, const ZeroShares& shares);

void write_calibration_csv(std::ostream& out, const CalibrationResult& result, const ScoreSpec& objective);

// Functional values (median, mean, OPF) and their case label.
void write_simulation_functionals_csv(std::ostream& out, const SimulationReport& report);
// 4 x 3 matrix of expected scores.
void write_simulation_scores_csv(std::ostream& out, const SimulationReport& report);
void write_simulation_markdown(std::ostream& out, const SimulationReport& report);

}  // namespace tadda
