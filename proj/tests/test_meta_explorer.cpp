#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pax/meta_explorer.hpp"
#include "pax/random.hpp"

using namespace pax;

namespace {

MetaState averages(double r_bar, double r_bbar) {
  MetaState s;
  s.r_bar = r_bar;
  s.r_bbar = r_bbar;
  return s;
}

}  // namespace

TEST(MetaAverages, HandEvaluated) {
  MetaConfig cfg;
  cfg.tau1 = 10.0;
  cfg.tau2 = 100.0;
  EXPECT_DOUBLE_EQ(update_averages(averages(0.0, 0.0), cfg, 1.0).r_bar, 0.1);
  const auto s = update_averages(averages(2.0, 1.0), cfg, 2.0);
  EXPECT_DOUBLE_EQ(s.r_bar, 2.0);
  EXPECT_DOUBLE_EQ(s.r_bbar, 1.01);
}

TEST(MetaAverages, LongTermUsesFreshShortTerm) {
  MetaConfig cfg;
  const auto s = update_averages(averages(0.0, 0.0), cfg, 1.0);
  EXPECT_DOUBLE_EQ(s.r_bbar, 0.1 / cfg.tau2);
}

TEST(MetaAverages, ConstantRewardFixedPoint) {
  MetaConfig cfg;
  MetaState s = averages(-3.0, 7.0);
  for (int i = 0; i < 5000; ++i) s = meta_step(s, cfg, 2.5);
  EXPECT_NEAR(s.r_bar, 2.5, 1e-6);
  EXPECT_NEAR(s.r_bbar, 2.5, 1e-6);
  EXPECT_NEAR(s.beta, cfg.f_intercept, 1e-4);
}

TEST(MetaAverages, RejectsNonFiniteReward) {
  EXPECT_THROW(update_averages({}, {}, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(meta_step({}, {}, -std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(MetaBeta, Examples) {
  MetaConfig cfg;
  cfg.f_intercept = 4.0;
  cfg.f_slope = 2.0;
  cfg.mu = 1.0;
  EXPECT_DOUBLE_EQ(compute_beta(averages(1.3, 1.3), cfg), 4.0);
  EXPECT_DOUBLE_EQ(compute_beta(averages(0.5, 1.0), cfg), 3.0);
  EXPECT_EQ(compute_beta(averages(-1e6, 1e6), cfg), cfg.f_min);
  EXPECT_GT(compute_beta(averages(1e300, -1e300), cfg), 0.0);
}

TEST(MetaSigma, MidpointAndLimits) {
  MetaConfig cfg;
  cfg.mu = 2.0;
  cfg.g_mid = -0.4;
  EXPECT_NEAR(compute_sigma(averages(0.8, 1.0), cfg), 10.0, 1e-12);

  const double hi = compute_sigma(averages(-1e6, 1e6), cfg);
  EXPECT_LT(hi, 20.0);
  EXPECT_GT(hi, 20.0 - 1e-9);

  const double lo = compute_sigma(averages(1e6, -1e6), cfg);
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(lo, 1e-9);
}

TEST(MetaSigma, DecreasingInGap) {
  MetaConfig cfg;
  double prev = 20.0;
  for (double gap = -5.0; gap <= 5.0; gap += 0.01) {
    const double s = compute_sigma(averages(gap, 0.0), cfg);
    ASSERT_LE(s, prev);
    prev = s;
  }
}

TEST(MetaProperties, BoundsHoldForArbitraryStreams) {
  RandomStream rng(21);
  MetaConfig cfg;
  cfg.mu = 50.0;
  MetaState s = MetaState::initial(cfg);
  for (int i = 0; i < 200000; ++i) {
    const double r = (i / 1000) % 2 ? 30.0 * rng.normal() : -5.0 + rng.uniform();
    s = meta_step(s, cfg, r);
    ASSERT_GT(s.beta, 0.0);
    ASSERT_GT(s.sigma, 0.0);
    ASSERT_LT(s.sigma, 20.0);
  }
}

TEST(MetaProperties, AveragesStayInRewardHull) {
  RandomStream rng(22);
  MetaConfig cfg;
  const double lo = -0.35, hi = 3.7;
  MetaState s = averages(lo, hi);
  for (int i = 0; i < 100000; ++i) {
    s = update_averages(s, cfg, lo + (hi - lo) * rng.uniform());
    ASSERT_GE(s.r_bar, lo);
    ASSERT_LE(s.r_bar, hi);
    ASSERT_GE(s.r_bbar, lo);
    ASSERT_LE(s.r_bbar, hi);
  }
}

TEST(MetaProperties, RaisingOneRewardNeverLowersLaterShortTermAverage) {
  RandomStream rng(23);
  MetaConfig cfg;
  std::vector<double> rewards(300);
  for (auto& r : rewards) r = 3.0 * rng.uniform();
  auto bumped = rewards;
  bumped[57] += 1.7;

  MetaState a, b;
  for (std::size_t i = 0; i < rewards.size(); ++i) {
    a = update_averages(a, cfg, rewards[i]);
    b = update_averages(b, cfg, bumped[i]);
    ASSERT_GE(b.r_bar, a.r_bar);
    ASSERT_GE(b.r_bbar, a.r_bbar);
  }
}

TEST(MetaProperties, DropWidensSigmaAndLowersBetaWithinTau1) {
  MetaConfig cfg;
  cfg.f_slope = 1.0;
  MetaState s = MetaState::initial(cfg);
  for (int i = 0; i < 5000; ++i) s = meta_step(s, cfg, 2.0);
  const MetaState before = s;
  bool sigma_up = false, beta_down = false;
  for (int i = 0; i < static_cast<int>(cfg.tau1); ++i) {
    const MetaState next = meta_step(s, cfg, 0.5);
    ASSERT_GT(next.sigma, s.sigma);
    ASSERT_LT(next.beta, s.beta);
    sigma_up = sigma_up || next.sigma > before.sigma;
    beta_down = beta_down || next.beta < before.beta;
    s = next;
  }
  EXPECT_TRUE(sigma_up);
  EXPECT_TRUE(beta_down);
}

TEST(MetaProperties, StepUpGivesPositiveGapDuringTransient) {
  MetaConfig cfg;
  MetaState s;
  for (int i = 0; i < 5000; ++i) s = meta_step(s, cfg, 0.5);
  const double beta0 = s.beta, sigma0 = s.sigma;
  for (int i = 0; i < 200; ++i) {
    s = meta_step(s, cfg, 2.0);
    ASSERT_GT(s.r_bar - s.r_bbar, 0.0);
    ASSERT_GT(s.beta, beta0);
    ASSERT_LT(s.sigma, sigma0);
  }
}

TEST(MetaState, InitialEvaluatedFromZeroAverages) {
  MetaConfig cfg;
  const auto s = MetaState::initial(cfg);
  EXPECT_EQ(s.r_bar, 0.0);
  EXPECT_EQ(s.r_bbar, 0.0);
  EXPECT_EQ(s.beta, cfg.f_intercept);
  EXPECT_DOUBLE_EQ(s.sigma, cfg.g_max / (1.0 + std::exp(-cfg.g_slope * cfg.g_mid)));
}

TEST(MetaConfig, Validation) {
  EXPECT_NO_THROW(MetaConfig{}.validate());
  auto bad = [](auto mutate) {
    MetaConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](MetaConfig& c) { c.tau1 = 1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.tau2 = c.tau1; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.mu = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.f_min = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.g_max = 25.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.g_slope = -1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](MetaConfig& c) { c.g_mid = std::numeric_limits<double>::quiet_NaN(); }).validate(),
               std::invalid_argument);
}
