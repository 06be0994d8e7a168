#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tadda/distributions.hpp"
#include "tadda/scores.hpp"

namespace tadda {

// Monthly fatality counts of one country over a contiguous block of integer
// month ids starting at first_month.
struct FatalitySeries {
  std::string country_id;
  int first_month = 0;
  std::vector<std::int64_t> fatalities;

  int last_month() const { return first_month + static_cast<int>(fatalities.size()) - 1; }
  bool covers(int month) const { return month >= first_month && month <= last_month(); }
  // Throws std::out_of_range for a month outside the series.
  std::int64_t at(int month) const;
};

// Throws std::invalid_argument on an empty series or a negative count.
void validate(const FatalitySeries& series);

// log(x_now + 1) - log(x_then + 1); exactly 0 when the counts agree.
double log_change(std::int64_t x_now, std::int64_t x_then);

struct LogChangeTarget {
  std::string country_id;
  int target_month = 0;
  int lead_time = 0;
  double value = 0.0;
};

LogChangeTarget make_target(const FatalitySeries& series, int target_month, int lead_time);

// Equal-weight distribution over the log-changes the last w observations
// would imply if the target month repeated one of them:
//   log(x_{issue-i} + 1) - log(x_issue + 1),  i = 0..w-1.
// The i = 0 atom is exactly 0. The distribution depends on the issue month
// only, never on the lead time.
DiscreteEmpirical window_distribution(const FatalitySeries& series, int issue_month, int window);

enum class Functional { Mean, OpfTadda1L1, OpfTadda1L2, OpfTadda2L1, NoChange };

std::string_view to_string(Functional f);
// Throws std::invalid_argument on an unknown name.
Functional parse_functional(std::string_view name);

// The functional that is optimal under the given score (SE -> mean,
// TADDA variants -> their OPF). AE has no functional here and throws.
Functional functional_for(const ScoreSpec& spec);

inline const std::vector<Functional>& all_functionals() {
  static const std::vector<Functional> all = {Functional::Mean, Functional::OpfTadda1L1, Functional::OpfTadda1L2,
                                              Functional::OpfTadda2L1, Functional::NoChange};
  return all;
}

struct ForecastRecord {
  std::string country_id;
  int target_month = 0;
  int lead_time = 0;
  Functional functional = Functional::NoChange;
  double y_hat = 0.0;
};

std::map<Functional, double> point_forecasts(const DiscreteEmpirical& dist, double eps);

}  // namespace tadda
