#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pax/agent.hpp"
#include "pax/config.hpp"

namespace pax {

struct RunLog {
  std::size_t run_id = 0;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;  // set when the run aborted
  std::vector<StepRecord> records;
};

// Per-timestep engagement statistics across runs.
struct AggregateSeries {
  std::vector<double> mean;
  std::vector<double> stddev;  // sample standard deviation, n - 1 denominator
  std::size_t num_runs = 0;
};

// One complete run of `config.total_steps` steps seeded with `seed`.
RunLog run_single(const ExperimentConfig& config, std::size_t run_id, std::uint64_t seed);

// Runs 0..num_runs-1 with seeds base_seed + i, spread over worker threads.
// A failing run is reported in its RunLog and does not stop the others.
std::vector<RunLog> run_experiment(const ExperimentConfig& config);

// Throws std::invalid_argument when the runs differ in length or none is given.
AggregateSeries aggregate(std::span<const RunLog> runs);

// Engagement trace e(t+1) of one run.
std::vector<double> engagement_trace(const RunLog& run);

}  // namespace pax
