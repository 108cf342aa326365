#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "pax/agent.hpp"
#include "pax/engagement_env.hpp"

namespace pax {

struct ExperimentConfig {
  std::string label;
  EnvConfig env;
  AgentConfig agent;
  std::size_t total_steps = 1;
  std::size_t num_runs = 1;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir = "out";
  bool emit_plots = false;
  std::size_t threads = 0;  // 0: one per hardware thread

  void validate() const;
};

// Experiment files are INI text:
//
//   [experiment]   label agent total_steps num_runs base_seed output_dir
//                  emit_plots threads
//   [environment]  num_actions param_min param_max eta1 eta2 e_max e_min
//                  e_init sigma_star lambda schedule schedule_mode
//   [learning]     alpha_q alpha_critic alpha_actor gamma param_dim
//   [fixed]        beta sigma
//   [meta]         tau1 tau2 mu f_intercept f_slope f_min g_max g_slope g_mid
//   [kalman]       process_noise obs_noise prior_var eta sigma_max
//                  sigma_slope sigma_midpoint
//
// `schedule` is a comma-separated list of a<action>:<optimum>:<duration>,
// actions numbered from 1, e.g. "a6:-20:200, a2:-20:400".
// `schedule_mode` is clamp or cycle. Missing keys keep their defaults;
// unknown sections or keys are rejected. The Kalman variant selects with
// [fixed] beta.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<Phase> parse_schedule(const std::string& text);
std::string format_schedule(const std::vector<Phase>& schedule);

}  // namespace pax
