#include "tadda/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/owens_t.hpp>

namespace tadda {

namespace {

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    std::ostringstream msg;
    msg << what << " must be finite, got " << x;
    throw std::invalid_argument(msg.str());
  }
}

// Relative slack used when p * w lands within rounding distance of an integer.
constexpr double kIndexFuzz = 4.0 * std::numeric_limits<double>::epsilon();

}  // namespace

void validate(const SkewNormalParams& params) {
  require_finite(params.xi, "skew normal location xi");
  require_finite(params.alpha, "skew normal slant alpha");
  if (!std::isfinite(params.omega) || params.omega <= 0.0) {
    std::ostringstream msg;
    msg << "skew normal scale omega must be positive, got " << params.omega;
    throw std::invalid_argument(msg.str());
  }
}

double skew_normal_pdf(const SkewNormalParams& params, double x) {
  validate(params);
  require_finite(x, "x");
  const double z = (x - params.xi) / params.omega;
  return 2.0 / params.omega * std_normal_pdf(z) * std_normal_cdf(params.alpha * z);
}

double skew_normal_cdf(const SkewNormalParams& params, double x) {
  validate(params);
  if (std::isnan(x)) throw std::invalid_argument("x must not be NaN");
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  if (x == std::numeric_limits<double>::infinity()) return 1.0;
  const double z = (x - params.xi) / params.omega;
  const double value = std_normal_cdf(z) - 2.0 * boost::math::owens_t(z, params.alpha);
  return std::clamp(value, 0.0, 1.0);
}

double skew_normal_mean(const SkewNormalParams& params) {
  validate(params);
  const double delta = params.alpha / std::sqrt(1.0 + params.alpha * params.alpha);
  return params.xi + params.omega * delta * std::sqrt(2.0 / std::numbers::pi);
}

double skew_normal_quantile(const SkewNormalParams& params, double p) {
  validate(params);
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "skew normal quantile level must lie in (0, 1), got " << p;
    throw std::invalid_argument(msg.str());
  }
  double lo = params.xi - params.omega;
  double hi = params.xi + params.omega;
  double step = params.omega;
  while (skew_normal_cdf(params, lo) > p) {
    step *= 2.0;
    lo = params.xi - step;
    if (step > 1e300) throw std::runtime_error("skew normal quantile: lower bracket not found");
  }
  step = params.omega;
  while (skew_normal_cdf(params, hi) < p) {
    step *= 2.0;
    hi = params.xi + step;
    if (step > 1e300) throw std::runtime_error("skew normal quantile: upper bracket not found");
  }
  // Invariant: cdf(lo) <= p <= cdf(hi).
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (skew_normal_cdf(params, mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::vector<double> skew_normal_sample(const SkewNormalParams& params, std::size_t n,
                                       std::uint64_t seed) {
  validate(params);
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");
  const double delta = params.alpha / std::sqrt(1.0 + params.alpha * params.alpha);
  const double rest = std::sqrt(1.0 - delta * delta);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> draws(n);
  for (auto& d : draws) {
    const double u0 = normal(rng);
    const double u1 = normal(rng);
    d = params.xi + params.omega * (delta * std::abs(u0) + rest * u1);
  }
  return draws;
}

SkewNormal::SkewNormal(SkewNormalParams params) : params_(params) { validate(params_); }

DiscreteEmpirical::DiscreteEmpirical(std::vector<double> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("a discrete distribution needs at least one atom");
  for (double a : atoms_) require_finite(a, "atom");
  std::sort(atoms_.begin(), atoms_.end());
}

double DiscreteEmpirical::cdf(double x) const {
  const auto n = std::upper_bound(atoms_.begin(), atoms_.end(), x) - atoms_.begin();
  return static_cast<double>(n) / static_cast<double>(atoms_.size());
}

double DiscreteEmpirical::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "type-1 quantile level must lie in (0, 1], got " << p;
    throw std::invalid_argument(msg.str());
  }
  const double w = static_cast<double>(atoms_.size());
  const double np = p * w;
  double index = std::ceil(np);
  if (index - np > 1.0 - kIndexFuzz * std::max(1.0, np)) index -= 1.0;
  index = std::clamp(index, 1.0, w);
  return atoms_[static_cast<std::size_t>(index) - 1];
}

double DiscreteEmpirical::mean() const {
  return std::accumulate(atoms_.begin(), atoms_.end(), 0.0) / static_cast<double>(atoms_.size());
}

double DiscreteEmpirical::prob_below(double t) const {
  const auto n = std::lower_bound(atoms_.begin(), atoms_.end(), t) - atoms_.begin();
  return static_cast<double>(n) / static_cast<double>(atoms_.size());
}

double DiscreteEmpirical::prob_at(double t) const {
  const auto [first, last] = std::equal_range(atoms_.begin(), atoms_.end(), t);
  return static_cast<double>(last - first) / static_cast<double>(atoms_.size());
}

double DiscreteEmpirical::prob_above(double t) const {
  const auto n = atoms_.end() - std::upper_bound(atoms_.begin(), atoms_.end(), t);
  return static_cast<double>(n) / static_cast<double>(atoms_.size());
}

std::vector<double> DiscreteEmpirical::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
  std::vector<double> draws(n);
  for (auto& d : draws) d = atoms_[pick(rng)];
  return draws;
}

double empirical_quantile_type1(const DiscreteEmpirical& dist, double p) { return dist.quantile(p); }

double empirical_quantile_type1(std::span<const double> values, double p) {
  return DiscreteEmpirical(std::vector<double>(values.begin(), values.end())).quantile(p);
}

TailProbabilities tail_probabilities(const PredictiveDistribution& dist, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
  return {dist.prob_below(-eps), dist.prob_at(-eps), dist.prob_above(eps)};
}

TailProbabilities empirical_tail_probs(const DiscreteEmpirical& dist, double eps) {
  return tail_probabilities(dist, eps);
}

}  // namespace tadda
