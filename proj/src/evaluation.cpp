#include "tadda/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tadda/errors.hpp"

namespace tadda {

int month_id(int year, int month) {
  if (month < 1 || month > 12) throw std::invalid_argument("calendar month must lie in 1..12");
  return (year - 1980) * 12 + month;
}

std::pair<int, int> year_month(int id) {
  const int zero_based = id - 1;
  const int year_offset = zero_based >= 0 ? zero_based / 12 : -((-zero_based + 11) / 12);
  return {1980 + year_offset, zero_based - year_offset * 12 + 1};
}

void validate(const EvaluationConfig& config) {
  const auto check_range = [](MonthRange r, const char* name) {
    if (r.start > r.end) throw std::invalid_argument(std::string(name) + " period ends before it starts");
  };
  check_range(config.calibration_period, "calibration");
  check_range(config.test_period, "test");
  if (config.calibration_period.end >= config.test_period.start) {
    throw std::invalid_argument("calibration period must end before the test period starts");
  }
  if (config.lead_times.empty()) throw std::invalid_argument("at least one lead time is required");
  for (int s : config.lead_times) {
    if (s < 1 || s > 12) throw std::invalid_argument("lead times must lie in 1..12, got " + std::to_string(s));
  }
  if (config.window && *config.window < 1) throw std::invalid_argument("window length must be at least 1");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.scores.empty()) throw std::invalid_argument("at least one score is required");
  if (config.functionals.empty()) throw std::invalid_argument("at least one functional is required");
}

MonthRange required_months(MonthRange period, std::span<const int> lead_times, int window) {
  const int max_lead = *std::max_element(lead_times.begin(), lead_times.end());
  return {period.start - max_lead - (window - 1), period.end};
}

void validate_panel(const Panel& panel, MonthRange required) {
  if (panel.empty()) throw DataError("panel contains no countries");
  constexpr std::size_t kMaxListed = 25;
  std::vector<std::string> gaps;
  std::size_t total = 0;
  for (const auto& series : panel) {
    for (int m = required.start; m <= required.end; ++m) {
      if (series.covers(m)) continue;
      if (gaps.size() < kMaxListed) gaps.push_back("(" + series.country_id + ", " + std::to_string(m) + ")");
      ++total;
    }
  }
  if (total == 0) return;
  std::ostringstream msg;
  msg << "panel is missing " << total << " country-month(s) needed for months " << required.start << ".."
      << required.end << ":";
  for (const auto& g : gaps) msg << ' ' << g;
  if (total > gaps.size()) msg << " ... and " << total - gaps.size() << " more";
  throw DataError(msg.str());
}

ForecastSet generate_forecasts(const Panel& panel, MonthRange period, std::span<const int> lead_times, int window,
                               double eps, std::span<const Functional> functionals) {
  if (lead_times.empty()) throw std::invalid_argument("at least one lead time is required");
  validate_panel(panel, required_months(period, lead_times, window));

  std::vector<const FatalitySeries*> ordered;
  for (const auto& s : panel) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->country_id < b->country_id; });

  std::vector<int> leads(lead_times.begin(), lead_times.end());
  std::sort(leads.begin(), leads.end());

  ForecastSet out;
  for (const auto* series : ordered) {
    for (int t = period.start; t <= period.end; ++t) {
      for (int s : leads) {
        const auto dist = window_distribution(*series, t - s, window);
        const auto point = point_forecasts(dist, eps);
        out.targets.push_back(make_target(*series, t, s));
        for (Functional f : functionals) {
          out.records.push_back({series->country_id, t, s, f, point.at(f)});
        }
      }
    }
  }
  return out;
}

double EvaluationTable::cell(Functional f, const ScoreSpec& s, int lead_time) const {
  return cells.at(CellKey{f, s, lead_time}).mean;
}

double EvaluationTable::grand_mean(Functional f, const ScoreSpec& s) const { return column_means.at({f, s}); }

EvaluationTable tabulate(const ForecastSet& forecasts, std::span<const Functional> functionals,
                         std::span<const ScoreSpec> scores, std::span<const int> lead_times) {
  EvaluationTable table;
  table.functionals.assign(functionals.begin(), functionals.end());
  table.scores.assign(scores.begin(), scores.end());
  table.lead_times.assign(lead_times.begin(), lead_times.end());
  std::sort(table.lead_times.begin(), table.lead_times.end());

  // Records are laid out as one block of functionals per target.
  const std::size_t per_target = functionals.size();
  if (forecasts.records.size() != forecasts.targets.size() * per_target) {
    throw std::invalid_argument("forecast records do not line up with targets");
  }

  std::map<CellKey, double> sums;
  std::map<CellKey, std::size_t> counts;
  std::vector<std::string> countries;
  for (std::size_t i = 0; i < forecasts.targets.size(); ++i) {
    const auto& target = forecasts.targets[i];
    if (countries.empty() || countries.back() != target.country_id) countries.push_back(target.country_id);
    for (std::size_t j = 0; j < per_target; ++j) {
      const auto& record = forecasts.records[i * per_target + j];
      for (const auto& spec : scores) {
        const CellKey key{record.functional, spec, target.lead_time};
        sums[key] += score(spec, record.y_hat, target.value);
        counts[key] += 1;
      }
    }
  }
  std::sort(countries.begin(), countries.end());
  table.countries = static_cast<std::size_t>(std::unique(countries.begin(), countries.end()) - countries.begin());

  for (Functional f : table.functionals) {
    for (const auto& spec : table.scores) {
      double column_total = 0.0;
      for (int s : table.lead_times) {
        const CellKey key{f, spec, s};
        const std::size_t n = counts[key];
        const double mean = n > 0 ? sums[key] / static_cast<double>(n) : std::nan("");
        table.cells[key] = {mean, n};
        column_total += mean;
      }
      table.column_means[{f, spec}] = column_total / static_cast<double>(table.lead_times.size());
    }
  }
  return table;
}

EvaluationTable evaluate_period(const Panel& panel, const EvaluationConfig& config, MonthRange period, int window) {
  validate(config);
  const auto forecasts =
      generate_forecasts(panel, period, config.lead_times, window, config.epsilon, config.functionals);
  auto table = tabulate(forecasts, config.functionals, config.scores, config.lead_times);
  table.window = window;
  return table;
}

EvaluationTable run_evaluation(const Panel& panel, const EvaluationConfig& config) {
  validate(config);
  int window = 0;
  if (config.window) {
    window = *config.window;
  } else {
    std::vector<int> candidates(11);
    std::iota(candidates.begin(), candidates.end(), 2);
    window = calibrate_window(panel, config, candidates, ScoreSpec::tadda1_l1(config.epsilon));
  }
  return evaluate_period(panel, config, config.test_period, window);
}

CalibrationResult calibrate_window_scores(const Panel& panel, const EvaluationConfig& config,
                                          std::span<const int> candidate_ws, const ScoreSpec& objective) {
  if (candidate_ws.size() < 2) throw std::invalid_argument("calibration needs at least two candidate windows");
  const Functional tailored = functional_for(objective);

  EvaluationConfig calibration = config;
  calibration.scores = {objective};
  calibration.functionals = {tailored};

  CalibrationResult result;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> ws(candidate_ws.begin(), candidate_ws.end());
  std::sort(ws.begin(), ws.end());
  for (int w : ws) {
    const auto table = evaluate_period(panel, calibration, config.calibration_period, w);
    const double value = table.grand_mean(tailored, objective);
    result.objective_by_window.emplace_back(w, value);
    if (value < best) {
      best = value;
      result.best_window = w;
    }
  }
  return result;
}

int calibrate_window(const Panel& panel, const EvaluationConfig& config, std::span<const int> candidate_ws,
                     const ScoreSpec& objective) {
  return calibrate_window_scores(panel, config, candidate_ws, objective).best_window;
}

std::vector<double> forecast_values(std::span<const ForecastRecord> records, Functional f) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.functional == f) out.push_back(r.y_hat);
  }
  return out;
}

std::vector<double> target_values(std::span<const LogChangeTarget> targets) {
  std::vector<double> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(t.value);
  return out;
}

QuantileSummary forecast_quantile_summary(std::span<const ForecastRecord> records,
                                          std::span<const LogChangeTarget> targets, std::span<const double> probs) {
  const auto means = forecast_values(records, Functional::Mean);
  const auto opfs = forecast_values(records, Functional::OpfTadda1L1);
  const auto truth = target_values(targets);
  if (means.empty() || opfs.empty() || truth.empty()) {
    throw std::invalid_argument("quantile summary needs mean forecasts, TADDA OPFs and targets");
  }
  const DiscreteEmpirical mean_dist(means);
  const DiscreteEmpirical opf_dist(opfs);
  const DiscreteEmpirical truth_dist(truth);

  QuantileSummary summary;
  summary.probs.assign(probs.begin(), probs.end());
  for (double p : probs) {
    summary.mean_forecasts.push_back(mean_dist.quantile(p));
    summary.opf_tadda_forecasts.push_back(opf_dist.quantile(p));
    summary.true_log_changes.push_back(truth_dist.quantile(p));
  }
  return summary;
}

double zero_share(std::span<const double> values, double tol) {
  if (tol < 0.0) throw std::invalid_argument("zero_share tolerance must be non-negative");
  if (values.empty()) throw std::invalid_argument("zero_share of an empty list");
  const auto zeros = std::count_if(values.begin(), values.end(), [tol](double v) { return std::abs(v) <= tol; });
  return static_cast<double>(zeros) / static_cast<double>(values.size());
}

SimulationReport simulation_report(const SkewNormalParams& params, double eps, std::size_t mc_samples,
                                   std::uint64_t seed) {
  if (mc_samples == 0) throw std::invalid_argument("simulation needs at least one Monte Carlo sample");
  const SkewNormal dist(params);

  SimulationReport report;
  report.params = params;
  report.eps = eps;
  report.mc_samples = mc_samples;
  report.seed = seed;
  report.median = opf_ae(dist);
  report.mean = opf_se(dist);
  report.opf = opf_tadda1_l1(dist, eps);
  report.tails = tail_probabilities(dist, eps);

  const std::array<double, 4> forecasts = {report.median, report.mean, report.opf.value, 0.0};
  const std::array<ScoreSpec, 3> specs = {ScoreSpec::ae(), ScoreSpec::se(), ScoreSpec::tadda1_l1(eps)};
  const auto draws = dist.sample(mc_samples, seed);
  for (std::size_t r = 0; r < forecasts.size(); ++r) {
    for (std::size_t c = 0; c < specs.size(); ++c) {
      report.expected[r][c] = expected_score(draws, specs[c], forecasts[r]);
      if (!std::isfinite(report.expected[r][c])) throw std::runtime_error("non-finite expected score in simulation");
    }
  }
  return report;
}

}  // namespace tadda
