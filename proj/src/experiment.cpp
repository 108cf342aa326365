#include "pax/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "pax/kernels/kernels.hpp"

namespace pax {

RunLog run_single(const ExperimentConfig& config, std::size_t run_id, std::uint64_t seed) {
  RunLog log;
  log.run_id = run_id;
  log.seed = seed;
  log.records.reserve(config.total_steps);
  try {
    AgentState agent = AgentState::initial(config.agent, config.env, seed);
    EnvState env = EnvState::initial(config.env);
    for (std::size_t t = 0; t < config.total_steps; ++t) {
      AgentStepResult res = agent_step(agent, env, config.agent, config.env);
      agent = std::move(res.agent);
      env = res.env;
      res.record.run_id = run_id;
      log.records.push_back(std::move(res.record));
    }
  } catch (const std::exception& e) {
    log.ok = false;
    log.error = e.what();
  }
  return log;
}

std::vector<RunLog> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<RunLog> logs(config.num_runs);
  std::size_t workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, config.num_runs);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.num_runs; i = next++) {
      logs[i] = run_single(config, i, config.base_seed + i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return logs;
}

std::vector<double> engagement_trace(const RunLog& run) {
  std::vector<double> out(run.records.size());
  std::transform(run.records.begin(), run.records.end(), out.begin(),
                 [](const StepRecord& r) { return r.engagement; });
  return out;
}

AggregateSeries aggregate(std::span<const RunLog> runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  const std::size_t len = runs.front().records.size();
  std::vector<std::vector<double>> traces;
  traces.reserve(runs.size());
  for (const RunLog& r : runs) {
    if (r.records.size() != len) throw std::invalid_argument("aggregate: runs have different lengths");
    traces.push_back(engagement_trace(r));
  }
  std::vector<std::span<const double>> rows(traces.begin(), traces.end());

  AggregateSeries out;
  out.num_runs = runs.size();
  out.mean.resize(len);
  out.stddev.resize(len);
  if (len > 0) kernels::column_mean_std(rows, out.mean, out.stddev);
  return out;
}

}  // namespace pax
