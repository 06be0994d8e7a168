#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "tadda/distributions.hpp"

using namespace tadda;
using tadda::testing::simpson;

namespace {

const SkewNormalParams kExample{-0.15, 0.4, 8.0};

}  // namespace

TEST(SkewNormal, StandardPdfAtZero) {
  EXPECT_NEAR(skew_normal_pdf({0.0, 1.0, 0.0}, 0.0), 0.3989423, 1e-7);
}

TEST(SkewNormal, PdfIntegratesToOne) {
  const auto f = [](double x) { return skew_normal_pdf(kExample, x); };
  EXPECT_NEAR(simpson(f, -4.0, 4.0, 20000), 1.0, 1e-9);
}

TEST(SkewNormal, CdfMatchesQuadratureOfPdf) {
  const auto f = [](double x) { return skew_normal_pdf(kExample, x); };
  for (double x : {-0.4, -0.15, -0.048, 0.0, 0.048, 0.12, 0.3, 0.8, 1.5}) {
    EXPECT_NEAR(skew_normal_cdf(kExample, x), simpson(f, -5.0, x, 20000), 1e-9) << "x=" << x;
  }
}

TEST(SkewNormal, CdfWithoutSlantIsNormal) {
  const SkewNormalParams p{0.3, 2.0, 0.0};
  for (double x : {-3.0, -1.0, 0.3, 2.0, 5.0}) {
    EXPECT_NEAR(skew_normal_cdf(p, x), tadda::testing::std_normal_cdf((x - 0.3) / 2.0), 1e-12);
  }
}

TEST(SkewNormal, ExampleMeanAndMedian) {
  EXPECT_NEAR(skew_normal_mean(kExample), 0.167, 5e-4);
  EXPECT_NEAR(skew_normal_quantile(kExample, 0.5), 0.120, 5e-4);
}

TEST(SkewNormal, MeanMatchesQuadrature) {
  const auto f = [](double x) { return x * skew_normal_pdf(kExample, x); };
  EXPECT_NEAR(skew_normal_mean(kExample), simpson(f, -4.0, 4.0, 20000), 1e-9);
}

TEST(SkewNormal, QuantileRoundTrip) {
  for (double p : {1e-6, 0.001, 0.05, 0.2, 0.5, 0.77, 0.95, 0.999, 1 - 1e-6}) {
    const double q = skew_normal_quantile(kExample, p);
    EXPECT_NEAR(skew_normal_cdf(kExample, q), p, 1e-7) << "p=" << p;
  }
}

TEST(SkewNormal, QuantileRejectsEndpoints) {
  EXPECT_THROW(skew_normal_quantile(kExample, 0.0), std::invalid_argument);
  EXPECT_THROW(skew_normal_quantile(kExample, 1.0), std::invalid_argument);
}

TEST(SkewNormal, RejectsBadScale) {
  EXPECT_THROW(validate(SkewNormalParams{0.0, 0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate(SkewNormalParams{0.0, -1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(validate(SkewNormalParams{NAN, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(SkewNormal(SkewNormalParams{0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST(SkewNormal, SampleKsAgainstNormal) {
  const SkewNormalParams p{0.0, 1.0, 0.0};
  auto xs = skew_normal_sample(p, 200000, 7);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = tadda::testing::std_normal_cdf(xs[i]);
    d = std::max({d, std::abs(c - i / n), std::abs((i + 1) / n - c)});
  }
  EXPECT_LT(d, 0.004);
}

TEST(SkewNormal, SampleEcdfMatchesCdf) {
  auto xs = skew_normal_sample(kExample, 1000000, 3);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); i += 97) {
    const double c = skew_normal_cdf(kExample, xs[i]);
    d = std::max({d, std::abs(c - i / n), std::abs((i + 1) / n - c)});
  }
  EXPECT_LT(d, 0.002);
}

TEST(SkewNormal, SampleIsDeterministicPerSeed) {
  EXPECT_EQ(skew_normal_sample(kExample, 1000, 11), skew_normal_sample(kExample, 1000, 11));
  EXPECT_NE(skew_normal_sample(kExample, 1000, 11), skew_normal_sample(kExample, 1000, 12));
}

TEST(SkewNormal, ExampleTails) {
  const SkewNormal d(kExample);
  const auto t = tail_probabilities(d, 0.048);
  EXPECT_NEAR(t.above, 0.62, 0.01);
  EXPECT_NEAR(t.below, 0.202, 0.001);
  EXPECT_EQ(t.at_minus, 0.0);
}

TEST(DiscreteEmpirical, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(DiscreteEmpirical({}), std::invalid_argument);
  EXPECT_THROW(DiscreteEmpirical({0.0, NAN}), std::invalid_argument);
  EXPECT_THROW(DiscreteEmpirical({0.0, INFINITY}), std::invalid_argument);
}

TEST(DiscreteEmpirical, AtomsAreSortedAndMeanIsAverage) {
  const DiscreteEmpirical d({0.3, -1.0, 0.3, 2.0});
  ASSERT_EQ(d.size(), 4u);
  EXPECT_TRUE(std::is_sorted(d.atoms().begin(), d.atoms().end()));
  EXPECT_DOUBLE_EQ(d.mean(), 0.4);
}

TEST(DiscreteEmpirical, CdfStepsAndPartition) {
  const DiscreteEmpirical d({-1.0, 0.0, 0.0, 2.0});
  EXPECT_DOUBLE_EQ(d.cdf(-1.5), 0.0);
  EXPECT_DOUBLE_EQ(d.cdf(-1.0), 0.25);
  EXPECT_DOUBLE_EQ(d.cdf(0.0), 0.75);
  EXPECT_DOUBLE_EQ(d.cdf(5.0), 1.0);
  for (double t : {-2.0, -1.0, -0.5, 0.0, 1.0, 2.0, 3.0}) {
    EXPECT_DOUBLE_EQ(d.prob_below(t) + d.prob_at(t) + d.prob_above(t), 1.0);
  }
  EXPECT_DOUBLE_EQ(d.prob_at(0.0), 0.5);
}

TEST(Type1Quantile, Examples) {
  const std::vector<double> xs = {1, 2, 3, 4};
  EXPECT_EQ(empirical_quantile_type1(xs, 0.5), 2.0);
  EXPECT_EQ(empirical_quantile_type1(xs, 0.51), 3.0);
  EXPECT_EQ(empirical_quantile_type1(xs, 1.0), 4.0);
  EXPECT_EQ(empirical_quantile_type1(xs, 0.01), 1.0);
  const std::vector<double> nine = {0, 0, 0, 0, 0, 0, 0, 0, 1.0};
  EXPECT_EQ(empirical_quantile_type1(nine, 0.5), 0.0);
  EXPECT_EQ(empirical_quantile_type1(nine, 8.0 / 9.0), 0.0);
  EXPECT_EQ(empirical_quantile_type1(nine, 0.9), 1.0);
}

TEST(Type1Quantile, RejectsOutOfRangeLevels) {
  const std::vector<double> xs = {1, 2};
  EXPECT_THROW(empirical_quantile_type1(xs, 0.0), std::invalid_argument);
  EXPECT_THROW(empirical_quantile_type1(xs, 1.5), std::invalid_argument);
}

// Generalized inverse: Q(p) is the smallest atom whose cdf reaches p.
TEST(Type1Quantile, IsGeneralizedInverseOnRandomInputs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 15);
  std::uniform_int_distribution<int> atom(-4, 4);
  std::uniform_real_distribution<double> level(1e-6, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> xs(static_cast<std::size_t>(size(rng)));
    for (auto& x : xs) x = 0.5 * atom(rng);
    const DiscreteEmpirical d(xs);
    const double p = level(rng);
    const double q = d.quantile(p);
    EXPECT_GE(d.cdf(q) + 1e-12, p);
    for (double a : d.atoms()) {
      if (a < q) EXPECT_LT(d.cdf(a), p + 1e-12);
    }
  }
}

TEST(Type1Quantile, HitsExactFractions) {
  std::vector<double> xs;
  for (int i = 0; i < 9; ++i) xs.push_back(i);
  const DiscreteEmpirical d(xs);
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(d.quantile(k / 9.0), k - 1.0) << k;
  EXPECT_EQ(d.quantile(0.5 * (1.0 + 1.0 / 9.0)), 4.0);
}

TEST(TailProbabilities, DiscreteStrictness) {
  const DiscreteEmpirical d({-0.048, -0.1, 0.0, 0.048, 0.2});
  const auto t = empirical_tail_probs(d, 0.048);
  EXPECT_DOUBLE_EQ(t.below, 0.2);
  EXPECT_DOUBLE_EQ(t.at_minus, 0.2);
  EXPECT_DOUBLE_EQ(t.above, 0.2);
}
