#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "pax/config.hpp"
#include "pax/experiment.hpp"

using namespace pax;

namespace {

const std::filesystem::path kPresets = PAX_PRESET_DIR;

RunLog fake_run(std::vector<double> engagement) {
  RunLog r;
  for (std::size_t t = 0; t < engagement.size(); ++t) {
    StepRecord rec;
    rec.t = t;
    rec.engagement = engagement[t];
    r.records.push_back(rec);
  }
  return r;
}

}  // namespace

TEST(Experiment, Fig1aRunHasOneRecordPerStep) {
  const auto cfg = load_config(kPresets / "fig1a.ini");
  const auto run = run_single(cfg, 0, cfg.base_seed);
  ASSERT_TRUE(run.ok) << run.error;
  ASSERT_EQ(run.records.size(), 600u);
  for (std::size_t t = 0; t < 600; ++t) {
    ASSERT_EQ(run.records[t].t, t);
    ASSERT_EQ(run.records[t].optimal_action, t < 200 ? 5u : 1u);
  }
  EXPECT_EQ(engagement_trace(run).size(), 600u);
  EXPECT_EQ(engagement_trace(run)[17], run.records[17].engagement);
}

TEST(Experiment, SeedsAreBaseSeedPlusRunIndex) {
  auto cfg = load_config(kPresets / "fig2_meta.ini");
  cfg.total_steps = 300;
  cfg.num_runs = 10;
  cfg.base_seed = 40;
  const auto runs = run_experiment(cfg);
  ASSERT_EQ(runs.size(), 10u);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    EXPECT_EQ(runs[i].run_id, i);
    EXPECT_EQ(runs[i].seed, 40u + i);
    EXPECT_TRUE(runs[i].ok);
    EXPECT_EQ(runs[i].records.size(), 300u);
    for (const auto& rec : runs[i].records) ASSERT_EQ(rec.run_id, i);
  }
  const auto single = run_single(cfg, 3, 43);
  for (std::size_t t = 0; t < 300; ++t) {
    ASSERT_EQ(single.records[t].engagement, runs[3].records[t].engagement);
    ASSERT_EQ(single.records[t].params, runs[3].records[t].params);
  }

  const auto agg = aggregate(runs);
  EXPECT_EQ(agg.num_runs, 10u);
  ASSERT_EQ(agg.mean.size(), 300u);
  for (std::size_t t = 0; t < 300; t += 37) {
    double m = 0.0;
    for (const auto& r : runs) m += r.records[t].engagement;
    m /= 10.0;
    double ss = 0.0;
    for (const auto& r : runs) ss += (r.records[t].engagement - m) * (r.records[t].engagement - m);
    EXPECT_NEAR(agg.mean[t], m, 1e-12);
    EXPECT_NEAR(agg.stddev[t], std::sqrt(ss / 9.0), 1e-12);
  }
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
  auto cfg = load_config(kPresets / "fig2_kalman.ini");
  cfg.total_steps = 250;
  cfg.num_runs = 6;
  cfg.threads = 1;
  const auto serial = run_experiment(cfg);
  cfg.threads = 4;
  const auto parallel = run_experiment(cfg);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    ASSERT_EQ(serial[i].records.size(), parallel[i].records.size());
    for (std::size_t t = 0; t < serial[i].records.size(); ++t) {
      ASSERT_EQ(serial[i].records[t].engagement, parallel[i].records[t].engagement);
      ASSERT_EQ(serial[i].records[t].cov_diag, parallel[i].records[t].cov_diag);
    }
  }
}

TEST(Aggregate, HandComputedMoments) {
  const std::vector<RunLog> runs{fake_run({4.0, 1.0}), fake_run({6.0, 1.0})};
  const auto agg = aggregate(runs);
  EXPECT_DOUBLE_EQ(agg.mean[0], 5.0);
  EXPECT_DOUBLE_EQ(agg.stddev[0], std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(agg.mean[1], 1.0);
  EXPECT_EQ(agg.stddev[1], 0.0);
}

TEST(Aggregate, SingleRunHasZeroSpread) {
  const std::vector<RunLog> runs{fake_run({3.0, 2.5, 7.0})};
  const auto agg = aggregate(runs);
  EXPECT_EQ(agg.mean, (std::vector<double>{3.0, 2.5, 7.0}));
  EXPECT_EQ(agg.stddev, (std::vector<double>{0.0, 0.0, 0.0}));
}

TEST(Aggregate, Errors) {
  EXPECT_THROW(aggregate(std::vector<RunLog>{}), std::invalid_argument);
  const std::vector<RunLog> ragged{fake_run({1.0, 2.0}), fake_run({1.0})};
  EXPECT_THROW(aggregate(ragged), std::invalid_argument);
}
