#include "tadda/forecaster.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tadda/opf.hpp"

namespace tadda {

std::int64_t FatalitySeries::at(int month) const {
  if (!covers(month)) {
    std::ostringstream msg;
    msg << "country " << country_id << " has no observation for month " << month << " (covers " << first_month
        << ".." << last_month() << ")";
    throw std::out_of_range(msg.str());
  }
  return fatalities[static_cast<std::size_t>(month - first_month)];
}

void validate(const FatalitySeries& series) {
  if (series.fatalities.empty()) throw std::invalid_argument("series for " + series.country_id + " is empty");
  for (std::size_t i = 0; i < series.fatalities.size(); ++i) {
    if (series.fatalities[i] < 0) {
      std::ostringstream msg;
      msg << "negative fatality count for " << series.country_id << " in month "
          << series.first_month + static_cast<int>(i);
      throw std::invalid_argument(msg.str());
    }
  }
}

double log_change(std::int64_t x_now, std::int64_t x_then) {
  if (x_now < 0 || x_then < 0) throw std::invalid_argument("fatality counts must be non-negative");
  return std::log(static_cast<double>(x_now) + 1.0) - std::log(static_cast<double>(x_then) + 1.0);
}

LogChangeTarget make_target(const FatalitySeries& series, int target_month, int lead_time) {
  return {series.country_id, target_month, lead_time,
          log_change(series.at(target_month), series.at(target_month - lead_time))};
}

DiscreteEmpirical window_distribution(const FatalitySeries& series, int issue_month, int window) {
  if (window < 1) throw std::invalid_argument("window length must be at least 1");
  const int first_needed = issue_month - (window - 1);
  if (first_needed < series.first_month || issue_month > series.last_month()) {
    std::ostringstream msg;
    msg << "insufficient history for " << series.country_id << ": window " << window << " at issue month "
        << issue_month << " needs months " << first_needed << ".." << issue_month << ", series covers "
        << series.first_month << ".." << series.last_month() << "; first producible issue month is "
        << series.first_month + window - 1;
    throw std::out_of_range(msg.str());
  }
  const std::int64_t latest = series.at(issue_month);
  std::vector<double> atoms;
  atoms.reserve(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) atoms.push_back(log_change(series.at(issue_month - i), latest));
  return DiscreteEmpirical(std::move(atoms));
}

std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::Mean: return "mean";
    case Functional::OpfTadda1L1: return "opf_tadda1_l1";
    case Functional::OpfTadda1L2: return "opf_tadda1_l2";
    case Functional::OpfTadda2L1: return "opf_tadda2_l1";
    case Functional::NoChange: return "no_change";
  }
  return "?";
}

Functional parse_functional(std::string_view name) {
  for (Functional f : all_functionals()) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown functional '" + std::string(name) + "'");
}

Functional functional_for(const ScoreSpec& spec) {
  switch (spec.kind()) {
    case ScoreKind::SE: return Functional::Mean;
    case ScoreKind::TADDA1_L1: return Functional::OpfTadda1L1;
    case ScoreKind::TADDA1_L2: return Functional::OpfTadda1L2;
    case ScoreKind::TADDA2_L1: return Functional::OpfTadda2L1;
    case ScoreKind::AE: break;
  }
  throw std::invalid_argument("no forecast functional is tailored to " + spec.to_string());
}

std::map<Functional, double> point_forecasts(const DiscreteEmpirical& dist, double eps) {
  return {
      {Functional::Mean, opf_se(dist)},
      {Functional::OpfTadda1L1, opf_tadda1_l1(dist, eps).value},
      {Functional::OpfTadda1L2, opf_tadda1_l2(dist, eps).value},
      {Functional::OpfTadda2L1, opf_tadda2_l1(dist, eps).value},
      {Functional::NoChange, 0.0},
  };
}

}  // namespace tadda
