#include "tadda/opf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tadda {

namespace {

// Probabilities of discrete families are ratios k/w; comparisons between
// them allow for the rounding of those ratios.
constexpr double kProbSlack = 1e-12;

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("tolerance eps must be positive and finite");
}

double level(double p) { return std::clamp(p, std::numeric_limits<double>::min(), 1.0); }

}  // namespace

std::string_view to_string(OpfCase c) {
  switch (c) {
    case OpfCase::Median: return "median";
    case OpfCase::Mean: return "mean";
    case OpfCase::HighConfidenceNegative: return "high-confidence-negative";
    case OpfCase::LowConfidenceNegative: return "low-confidence-negative";
    case OpfCase::MedianInTolerance: return "median-in-tolerance";
    case OpfCase::CentralQuantile: return "central-quantile";
    case OpfCase::LowConfidencePositive: return "low-confidence-positive";
    case OpfCase::HighConfidencePositive: return "high-confidence-positive";
    case OpfCase::MeanInTolerance: return "mean-in-tolerance";
    case OpfCase::ShrunkMeanPositive: return "shrunk-mean-positive";
    case OpfCase::ShrunkMeanNegative: return "shrunk-mean-negative";
  }
  return "?";
}

double opf_ae(const PredictiveDistribution& dist) { return dist.quantile(0.5); }

double opf_se(const PredictiveDistribution& dist) { return dist.mean(); }

OpfResult opf_tadda1_l1(const PredictiveDistribution& dist, double eps) {
  require_eps(eps);
  const auto tails = tail_probabilities(dist, eps);
  const double pm = tails.below;
  const double pp = tails.above;

  if (pm >= 0.5 * (1.0 + pp) - kProbSlack) {
    return {dist.quantile(level(0.5 * (1.0 + pp))), OpfCase::HighConfidenceNegative};
  }
  if (pm > 0.5 + kProbSlack) {
    return {-eps, OpfCase::LowConfidenceNegative};
  }
  if (pp <= 0.5 + kProbSlack) {
    // With pi- = 1/2 exactly a type-1 median can sit below -eps while -eps is
    // still a median.
    return {std::max(dist.quantile(0.5), -eps), OpfCase::MedianInTolerance};
  }
  if (pp <= 0.5 * (1.0 + pm) + kProbSlack) {
    return {eps, OpfCase::LowConfidencePositive};
  }
  return {dist.quantile(level(0.5 * (1.0 - pm))), OpfCase::HighConfidencePositive};
}

OpfResult opf_tadda1_l2(const PredictiveDistribution& dist, double eps) {
  require_eps(eps);
  const double mu = dist.mean();
  if (mu > eps) {
    const double pm = dist.prob_below(-eps);
    return {(mu + eps * pm) / (1.0 + pm), OpfCase::ShrunkMeanPositive};
  }
  if (mu < -eps) {
    const double pp = dist.prob_above(eps);
    return {(mu - eps * pp) / (1.0 + pp), OpfCase::ShrunkMeanNegative};
  }
  return {mu, OpfCase::MeanInTolerance};
}

OpfResult opf_tadda2_l1(const PredictiveDistribution& dist, double eps) {
  require_eps(eps);
  const auto tails = tail_probabilities(dist, eps);
  const double pm = tails.below;
  const double pp = tails.above;
  const double p_at = tails.at_minus;

  if (pm >= 2.0 / 3.0 - kProbSlack) {
    return {dist.quantile(level(0.5 * (2.0 - pm))), OpfCase::HighConfidenceNegative};
  }
  if (3.0 * pm >= 1.0 + pp - 2.0 * p_at - kProbSlack) {
    return {-eps, OpfCase::LowConfidenceNegative};
  }
  if (pp < (1.0 + pm) / 3.0 - kProbSlack) {
    // An atom at +eps can pull this quantile onto eps itself, which is then
    // also the optimum.
    return {dist.quantile(level(0.5 * (1.0 - pm + pp))), OpfCase::CentralQuantile};
  }
  if (pp <= 2.0 / 3.0 + kProbSlack) {
    return {eps, OpfCase::LowConfidencePositive};
  }
  return {dist.quantile(level(0.5 * pp)), OpfCase::HighConfidencePositive};
}

OpfResult optimal_point_forecast(const PredictiveDistribution& dist, const ScoreSpec& spec) {
  switch (spec.kind()) {
    case ScoreKind::AE: return {opf_ae(dist), OpfCase::Median};
    case ScoreKind::SE: return {opf_se(dist), OpfCase::Mean};
    case ScoreKind::TADDA1_L1: return opf_tadda1_l1(dist, spec.epsilon());
    case ScoreKind::TADDA1_L2: return opf_tadda1_l2(dist, spec.epsilon());
    case ScoreKind::TADDA2_L1: return opf_tadda2_l1(dist, spec.epsilon());
  }
  throw std::logic_error("unhandled score kind");
}

double expected_score(std::span<const double> outcomes, const ScoreSpec& spec, double y_hat) {
  if (outcomes.empty()) throw std::invalid_argument("expected score over an empty sample");
  double total = 0.0;
  for (double y : outcomes) total += score(spec, y_hat, y);
  return total / static_cast<double>(outcomes.size());
}

double expected_score(const PredictiveDistribution& dist, const ScoreSpec& spec, double y_hat,
                      std::size_t mc_samples, std::uint64_t seed) {
  if (const auto* discrete = dynamic_cast<const DiscreteEmpirical*>(&dist)) {
    return expected_score(discrete->atoms(), spec, y_hat);
  }
  if (mc_samples == 0) throw std::invalid_argument("Monte Carlo expected score needs at least one sample");
  const auto draws = dist.sample(mc_samples, seed);
  return expected_score(draws, spec, y_hat);
}

Grid default_grid(const PredictiveDistribution& dist, const ScoreSpec& spec) {
  const double pad = is_tadda(spec.kind()) ? spec.epsilon() : 0.0;
  return {dist.quantile(0.001) - pad, dist.quantile(0.999) + pad, 1e-3};
}

double brute_force_opf(const PredictiveDistribution& dist, const ScoreSpec& spec, const Grid& grid,
                       std::size_t mc_samples, std::uint64_t seed) {
  if (!(grid.step > 0.0) || !(grid.lo <= grid.hi) || !std::isfinite(grid.lo) || !std::isfinite(grid.hi)) {
    throw std::invalid_argument("brute_force_opf: empty or malformed grid");
  }
  const auto points = static_cast<std::size_t>(std::floor((grid.hi - grid.lo) / grid.step + 1e-9)) + 1;

  std::vector<double> draws;
  std::span<const double> outcomes;
  if (const auto* discrete = dynamic_cast<const DiscreteEmpirical*>(&dist)) {
    outcomes = discrete->atoms();
  } else {
    if (mc_samples == 0) throw std::invalid_argument("brute_force_opf needs at least one Monte Carlo sample");
    draws = dist.sample(mc_samples, seed);
    outcomes = draws;
  }

  double best_value = grid.lo;
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double y_hat = grid.lo + static_cast<double>(i) * grid.step;
    const double s = expected_score(outcomes, spec, y_hat);
    if (s < best_score) {
      best_score = s;
      best_value = y_hat;
    }
  }
  return best_value;
}

}  // namespace tadda
