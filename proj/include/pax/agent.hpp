#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pax/continuous_ac.hpp"
#include "pax/discrete_q.hpp"
#include "pax/engagement_env.hpp"
#include "pax/kalman_ql.hpp"
#include "pax/meta_explorer.hpp"
#include "pax/random.hpp"

namespace pax {

enum class ExplorationKind { fixed, meta, kalman };

const char* to_string(ExplorationKind kind);
ExplorationKind parse_exploration_kind(const std::string& name);

struct AgentVariant {
  ExplorationKind kind = ExplorationKind::fixed;
  double fixed_beta = 4.0;    // softmax inverse temperature for fixed and kalman
  double fixed_sigma = 20.0;  // parameter exploration width for fixed
};

struct AgentConfig {
  AgentVariant variant;
  std::size_t param_dim = 1;
  QConfig q;
  ACConfig ac;
  MetaConfig meta;
  KalmanConfig kalman;
  IncreasingSigmoid kalman_sigma;

  void validate() const;
};

// Exactly one exploration controller is live per agent; fixed carries none.
using ControllerState = std::variant<std::monostate, MetaState, KalmanState>;

struct AgentState {
  QTable q_table;
  CriticParams critic;
  ActorParams actor;
  ControllerState controller;
  RandomStream rng;

  static AgentState initial(const AgentConfig& config, const EnvConfig& env, std::uint64_t seed);
};

// Telemetry for one timestep. Controller-specific fields are empty/NaN when
// not applicable to the variant.
struct StepRecord {
  std::size_t t = 0;
  std::size_t run_id = 0;
  std::size_t phase = 0;           // schedule phase active when the action was taken
  std::size_t optimal_action = 0;
  double optimal_param = 0.0;
  std::size_t action = 0;
  std::vector<double> params;      // sampled parameters actually executed
  std::vector<double> param_means; // learned means after the update, [action][dim]
  double engagement = 0.0;         // e(t+1)
  double reward = 0.0;             // r(t+1)
  double beta = 0.0;               // inverse temperature used for selection
  double sigma = 0.0;              // exploration width used for the executed action
  std::vector<double> action_sigmas;  // per-action widths (kalman only)
  std::vector<double> q_values;    // Q row (Kalman mean for kalman) after the update
  std::vector<double> cov_diag;    // Kalman variances after the update (kalman only)
  double r_bar = 0.0;              // meta only, after the update
  double r_bbar = 0.0;
};

struct AgentStepResult {
  AgentState agent;
  EnvState env;
  StepRecord record;
};

// Raised when a component fails mid-run; carries the offending timestep.
class StepError : public std::runtime_error {
 public:
  StepError(std::size_t timestep, const std::string& what)
      : std::runtime_error("timestep " + std::to_string(timestep) + ": " + what), timestep_(timestep) {}
  std::size_t timestep() const { return timestep_; }

 private:
  std::size_t timestep_;
};

// One pass of the control loop:
//   1. softmax selection of the discrete action with the current beta
//      (Kalman: bonused means);
//   2. Gaussian sampling of its parameters with the current sigma
//      (Kalman: action-specific sigma);
//   3. environment transition;
//   4. Q-learning update (skipped for Kalman, whose filter owns the values);
//   5. critic and actor updates from one shared TD error;
//   6. controller update (meta: averages then beta/sigma; Kalman: filter step);
//   7. telemetry.
// The beta/sigma used in step t are those produced at the end of step t-1.
AgentStepResult agent_step(const AgentState& agent, const EnvState& env, const AgentConfig& config,
                           const EnvConfig& env_config);

// Exploration parameters the agent will use at its next step.
double current_beta(const AgentState& agent, const AgentConfig& config);
std::vector<double> current_sigmas(const AgentState& agent, const AgentConfig& config);

}  // namespace pax
