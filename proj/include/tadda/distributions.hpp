#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tadda {

// A predictive distribution F for a real-valued outcome Y (here: a log-change
// in monthly fatalities). Values are immutable after construction.
//
// quantile() is the generalized inverse inf{x : cdf(x) >= p}. The three
// probabilities prob_below(t), prob_at(t) and prob_above(t) partition the
// real line and sum to one.
class PredictiveDistribution {
 public:
  virtual ~PredictiveDistribution() = default;

  virtual double cdf(double x) const = 0;
  virtual double quantile(double p) const = 0;
  virtual double mean() const = 0;
  double median() const { return quantile(0.5); }

  // Pr(Y < t)
  virtual double prob_below(double t) const { return cdf(t) - prob_at(t); }
  // Pr(Y = t)
  virtual double prob_at(double t) const = 0;
  // Pr(Y > t)
  virtual double prob_above(double t) const { return 1.0 - cdf(t); }

  virtual std::vector<double> sample(std::size_t n, std::uint64_t seed) const = 0;
};

struct SkewNormalParams {
  double xi = 0.0;     // location
  double omega = 1.0;  // scale, > 0
  double alpha = 0.0;  // slant
};

// Throws std::invalid_argument unless omega is finite and positive and the
// other parameters are finite.
void validate(const SkewNormalParams& params);

double skew_normal_pdf(const SkewNormalParams& params, double x);
// Phi(z) - 2 T(z, alpha) with Owen's T function; absolute error well below 1e-9.
double skew_normal_cdf(const SkewNormalParams& params, double x);
double skew_normal_mean(const SkewNormalParams& params);
// Bracketed bisection on the cdf; requires 0 < p < 1.
double skew_normal_quantile(const SkewNormalParams& params, double p);
// Z = delta |U0| + sqrt(1 - delta^2) U1, returned as xi + omega Z.
std::vector<double> skew_normal_sample(const SkewNormalParams& params, std::size_t n,
                                       std::uint64_t seed);

class SkewNormal final : public PredictiveDistribution {
 public:
  explicit SkewNormal(SkewNormalParams params);

  const SkewNormalParams& params() const { return params_; }

  double pdf(double x) const { return skew_normal_pdf(params_, x); }
  double cdf(double x) const override { return skew_normal_cdf(params_, x); }
  double quantile(double p) const override { return skew_normal_quantile(params_, p); }
  double mean() const override { return skew_normal_mean(params_); }
  double prob_at(double) const override { return 0.0; }
  std::vector<double> sample(std::size_t n, std::uint64_t seed) const override {
    return skew_normal_sample(params_, n, seed);
  }

 private:
  SkewNormalParams params_;
};

// Equal-weight discrete distribution on w atoms (duplicates allowed). Atoms
// are stored sorted ascending; each carries probability 1/w.
class DiscreteEmpirical final : public PredictiveDistribution {
 public:
  explicit DiscreteEmpirical(std::vector<double> atoms);

  std::span<const double> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double cdf(double x) const override;
  // Type-1 quantile: the sorted atom at 1-based index ceil(p w); 0 < p <= 1.
  double quantile(double p) const override;
  double mean() const override;

  double prob_below(double t) const override;
  double prob_at(double t) const override;
  double prob_above(double t) const override;

  std::vector<double> sample(std::size_t n, std::uint64_t seed) const override;

 private:
  std::vector<double> atoms_;
};

double empirical_quantile_type1(const DiscreteEmpirical& dist, double p);

// Sorts a copy of the values and returns their type-1 quantile.
double empirical_quantile_type1(std::span<const double> values, double p);

struct TailProbabilities {
  double below = 0.0;     // Pr(Y < -eps)
  double at_minus = 0.0;  // Pr(Y = -eps)
  double above = 0.0;     // Pr(Y > eps)
};

TailProbabilities tail_probabilities(const PredictiveDistribution& dist, double eps);
TailProbabilities empirical_tail_probs(const DiscreteEmpirical& dist, double eps);

}  // namespace tadda
