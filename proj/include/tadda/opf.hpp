#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tadda/distributions.hpp"
#include "tadda/scores.hpp"

namespace tadda {

// Which branch of a closed-form optimal point forecast fired.
enum class OpfCase {
  Median,                  // absolute error
  Mean,                    // squared error
  HighConfidenceNegative,  // OPF is a quantile below -eps
  LowConfidenceNegative,   // OPF = -eps
  MedianInTolerance,       // TADDA1-L1, |median| <= eps
  CentralQuantile,         // TADDA2-L1, quantile inside [-eps, eps]
  LowConfidencePositive,   // OPF = eps
  HighConfidencePositive,  // OPF is a quantile above eps
  MeanInTolerance,         // TADDA1-L2, |mean| <= eps
  ShrunkMeanPositive,      // TADDA1-L2, mean > eps
  ShrunkMeanNegative,      // TADDA1-L2, mean < -eps
};

std::string_view to_string(OpfCase c);

struct OpfResult {
  double value = 0.0;
  OpfCase case_label = OpfCase::Median;
};

double opf_ae(const PredictiveDistribution& dist);
double opf_se(const PredictiveDistribution& dist);

// Optimal point forecasts under the three TADDA variants. With
// pi- = Pr(Y < -eps) and pi+ = Pr(Y > eps):
//
// TADDA1-L1
//   F^-1(0.5 (1 + pi+))   if pi- >= 0.5 (1 + pi+)
//   -eps                  if 0.5 < pi- < 0.5 (1 + pi+)
//   median                if pi- <= 0.5 and pi+ <= 0.5
//   eps                   if 0.5 < pi+ <= 0.5 (1 + pi-)
//   F^-1(0.5 (1 - pi-))   if pi+ > 0.5 (1 + pi-)
//
// TADDA1-L2
//   mean                             if |mean| <= eps
//   (mean + eps pi-) / (1 + pi-)     if mean > eps
//   (mean - eps pi+) / (1 + pi+)     if mean < -eps
//
// TADDA2-L1
//   F^-1(0.5 (2 - pi-))          if pi- >= 2/3
//   -eps                         if 3 pi- >= 1 + pi+ - 2 Pr(Y = -eps)
//   F^-1(0.5 (1 - pi- + pi+))    if that quantile lies below eps
//   eps                          if pi+ <= 2/3
//   F^-1(0.5 pi+)                otherwise
//
// For a discrete F the expected score can be flat over an interval. The
// returned value is always the smallest minimizer, so in the median branch of
// TADDA1-L1 a type-1 median below -eps is lifted to -eps.
OpfResult opf_tadda1_l1(const PredictiveDistribution& dist, double eps);
OpfResult opf_tadda1_l2(const PredictiveDistribution& dist, double eps);
OpfResult opf_tadda2_l1(const PredictiveDistribution& dist, double eps);

// Dispatches on spec.kind().
OpfResult optimal_point_forecast(const PredictiveDistribution& dist, const ScoreSpec& spec);

// E_F[s(y_hat, Y)]. Exact finite sum for a DiscreteEmpirical (mc_samples and
// seed are ignored); Monte Carlo average over mc_samples seeded draws otherwise.
double expected_score(const PredictiveDistribution& dist, const ScoreSpec& spec, double y_hat,
                      std::size_t mc_samples = 1'000'000, std::uint64_t seed = 1);

double expected_score(std::span<const double> outcomes, const ScoreSpec& spec, double y_hat);

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1e-3;
};

// [F^-1(0.001) - eps, F^-1(0.999) + eps] with step 1e-3 (eps = 0 for AE/SE).
Grid default_grid(const PredictiveDistribution& dist, const ScoreSpec& spec);

// Independent oracle: the grid point with the lowest expected score, ties to
// the smallest value. Continuous distributions reuse one seeded sample for all
// grid points.
double brute_force_opf(const PredictiveDistribution& dist, const ScoreSpec& spec, const Grid& grid,
                       std::size_t mc_samples = 200'000, std::uint64_t seed = 1);

}  // namespace tadda
