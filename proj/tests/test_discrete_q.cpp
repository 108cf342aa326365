#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pax/discrete_q.hpp"
#include "pax/random.hpp"

using namespace pax;

TEST(QUpdate, HandEvaluatedBackup) {
  QTable q(1, 6);
  const auto out = q_update(q, {0.1, 0.9}, 0, 2, 1.0, 0);
  EXPECT_DOUBLE_EQ(out(0, 2), 0.1);
}

TEST(QUpdate, BootstrapsFromNextStateMaximum) {
  QTable q(2, 3);
  q(1, 0) = 2.0;
  q(1, 1) = 5.0;
  q(1, 2) = -1.0;
  q(0, 1) = 1.0;
  const auto out = q_update(q, {0.5, 0.9}, 0, 1, 0.5, 1);
  EXPECT_DOUBLE_EQ(out(0, 1), 1.0 + 0.5 * (0.5 + 0.9 * 5.0 - 1.0));
}

TEST(QUpdate, ZeroLearningRateIsIdentity) {
  QTable q(3, 4);
  RandomStream rng(2);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t a = 0; a < 4; ++a) q(s, a) = rng.normal();
  for (int i = 0; i < 50; ++i) {
    const auto out = q_update(q, {0.0, 0.9}, i % 3, i % 4, 10.0 * rng.normal(), (i + 1) % 3);
    ASSERT_EQ(out, q);
  }
}

TEST(QUpdate, ConvergesToDiscountedFixedPoint) {
  for (double c : {1.0, -0.5, 3.25}) {
    QTable q(1, 1);
    for (int i = 0; i < 2000; ++i) q = q_update(q, {0.1, 0.9}, 0, 0, c, 0);
    EXPECT_NEAR(q(0, 0), 10.0 * c, 1e-6);
  }
}

TEST(QUpdate, LeavesOtherCellsBitIdentical) {
  QTable q(2, 6);
  RandomStream rng(4);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < 6; ++a) q(s, a) = rng.normal();
  const auto out = q_update(q, {0.3, 0.5}, 1, 4, 2.0, 0);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t a = 0; a < 6; ++a) {
      if (!(s == 1 && a == 4)) {
        EXPECT_EQ(out(s, a), q(s, a));
      }
    }
  EXPECT_NE(out(1, 4), q(1, 4));
}

TEST(QUpdate, StaysBoundedUnderBoundedRewards) {
  const double r_max = 3.7, gamma = 0.9;
  QTable q(1, 6);
  RandomStream rng(5);
  for (int i = 0; i < 100000; ++i) {
    const auto a = static_cast<std::size_t>(rng.uniform() * 6);
    q = q_update(q, {0.2, gamma}, 0, a, -r_max + 2.0 * r_max * rng.uniform(), 0);
  }
  for (double v : q.row(0)) EXPECT_LE(std::abs(v), r_max / (1.0 - gamma) + 1e-9);
}

TEST(QUpdate, Errors) {
  QTable q(1, 6);
  EXPECT_THROW(q_update(q, {}, 0, 0, std::numeric_limits<double>::quiet_NaN(), 0), std::domain_error);
  EXPECT_THROW(q_update(q, {}, 0, 0, std::numeric_limits<double>::infinity(), 0), std::domain_error);
  EXPECT_THROW(q_update(q, {}, 1, 0, 1.0, 0), std::out_of_range);
  EXPECT_THROW(q_update(q, {}, 0, 6, 1.0, 0), std::out_of_range);
  EXPECT_THROW(q_update(q, {}, 0, 0, 1.0, 1), std::out_of_range);
}

TEST(QConfig, Validation) {
  EXPECT_NO_THROW((QConfig{0.0, 0.0}.validate()));
  EXPECT_THROW((QConfig{-0.1, 0.9}.validate()), std::invalid_argument);
  EXPECT_THROW((QConfig{1.1, 0.9}.validate()), std::invalid_argument);
  EXPECT_THROW((QConfig{0.1, 1.0}.validate()), std::invalid_argument);
}

TEST(Softmax, EqualValuesGiveUniform) {
  const std::vector<double> q(6, 3.0);
  for (double beta : {0.01, 1.0, 4.0, 1000.0}) {
    for (double p : softmax_probs(q, beta)) EXPECT_NEAR(p, 1.0 / 6.0, 1e-15);
  }
}

TEST(Softmax, TwoActionClosedForm) {
  const std::vector<double> q{1.0, 0.0};
  const auto p = softmax_probs(q, 1.0);
  const double e = std::exp(1.0);
  EXPECT_NEAR(p[0], e / (1.0 + e), 1e-15);
  EXPECT_NEAR(p[1], 1.0 / (1.0 + e), 1e-15);
  EXPECT_NEAR(p[0], 0.73106, 1e-5);
}

TEST(Softmax, GreedyLimitWithoutOverflow) {
  const std::vector<double> q{1.0, 0.0};
  const auto p = softmax_probs(q, 1000.0);
  EXPECT_NEAR(p[0], 1.0, 1e-9);
  EXPECT_NEAR(p[1], 0.0, 1e-9);

  const std::vector<double> big{800.0, 799.0, -5.0};
  for (double x : softmax_probs(big, 50.0)) EXPECT_TRUE(std::isfinite(x));
}

TEST(Softmax, NormalizedShiftInvariantArgmaxPreserving) {
  RandomStream rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8);
    std::vector<double> q(n);
    for (double& v : q) v = 20.0 * rng.normal();
    const double beta = 0.01 + 20.0 * rng.uniform();
    const auto p = softmax_probs(q, beta);
    ASSERT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
    for (double x : p) ASSERT_GT(x, -1e-300);

    const double c = 100.0 * rng.normal();
    std::vector<double> shifted = q;
    for (double& v : shifted) v += c;
    const auto ps = softmax_probs(shifted, beta);
    for (std::size_t j = 0; j < n; ++j) ASSERT_NEAR(ps[j], p[j], 1e-12);

    ASSERT_EQ(std::max_element(p.begin(), p.end()) - p.begin(), std::max_element(q.begin(), q.end()) - q.begin());
  }
}

TEST(Softmax, Errors) {
  EXPECT_THROW(softmax_probs(std::vector<double>{}, 1.0), std::invalid_argument);
  EXPECT_THROW(softmax_probs(std::vector<double>{1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(softmax_probs(std::vector<double>{1.0}, -1.0), std::invalid_argument);
  EXPECT_THROW(softmax_probs(std::vector<double>{1.0}, std::numeric_limits<double>::infinity()),
               std::invalid_argument);
}

TEST(SampleAction, PointMass) {
  RandomStream rng(1);
  const std::vector<double> p{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_action(p, rng), 0u);
  const std::vector<double> last{0.0, 0.0, 1.0};
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_action(last, rng), 2u);
}

TEST(SampleAction, UniformFrequenciesWithinThreeSigma) {
  RandomStream rng(2);
  const std::vector<double> p(6, 1.0 / 6.0);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) ++counts[sample_action(p, rng)];
  const double sd = std::sqrt(60000.0 * (1.0 / 6.0) * (5.0 / 6.0));
  for (int c : counts) EXPECT_NEAR(c, 10000.0, 3.0 * sd);
}

TEST(SampleAction, MonteCarloMatchesSkewedDistribution) {
  RandomStream rng(3);
  const std::vector<double> p{0.05, 0.5, 0.0, 0.25, 0.2};
  const int n = 100000;
  std::vector<int> counts(p.size(), 0);
  for (int i = 0; i < n; ++i) ++counts[sample_action(p, rng)];
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double sd = std::sqrt(n * p[j] * (1.0 - p[j]));
    EXPECT_NEAR(counts[j], n * p[j], 4.0 * sd + 1e-9);
  }
  EXPECT_EQ(counts[2], 0);
}

TEST(SampleAction, ConsumesOneDrawAndIsReproducible) {
  RandomStream a(9), b(9);
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  for (int i = 0; i < 500; ++i) ASSERT_EQ(sample_action(p, a), sample_action(p, b));
  EXPECT_EQ(a.draws(), 500u);
}

TEST(SampleAction, RejectsDegenerateInput) {
  RandomStream rng(1);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(sample_action(std::vector<double>{}, rng), std::invalid_argument);
  EXPECT_THROW(sample_action(std::vector<double>{0.5, nan, 0.5}, rng), std::invalid_argument);
  EXPECT_THROW(sample_action(std::vector<double>{1.5, -0.5}, rng), std::invalid_argument);
  EXPECT_THROW(sample_action(std::vector<double>{0.5, 0.4}, rng), std::invalid_argument);
  EXPECT_EQ(rng.draws(), 0u);
}
