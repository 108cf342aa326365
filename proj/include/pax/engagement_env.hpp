#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pax {

// One segment of the non-stationary task: while active, only
// `optimal_action` can raise engagement, and only with a parameter near
// `optimal_param`.
struct Phase {
  std::size_t optimal_action = 0;
  double optimal_param = 0.0;
  std::size_t duration = 1;

  friend bool operator==(const Phase&, const Phase&) = default;
};

// What happens once the schedule's total duration has elapsed.
enum class ScheduleMode { clamp, cycle };

struct EnvConfig {
  std::size_t num_actions = 6;
  double param_min = -100.0;
  double param_max = 100.0;
  double eta1 = 0.1;   // increasing rate
  double eta2 = 0.05;  // decreasing rate
  double e_max = 10.0;
  double e_min = 0.0;
  double e_init = 5.0;
  double sigma_star = 10.0;
  double lambda = 0.7;  // weight of the engagement increment in the reward
  std::vector<Phase> schedule;
  ScheduleMode schedule_mode = ScheduleMode::clamp;

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

struct EnvState {
  double engagement = 0.0;
  std::size_t timestep = 0;
  std::size_t phase_index = 0;

  static EnvState initial(const EnvConfig& config);

  friend bool operator==(const EnvState&, const EnvState&) = default;
};

// A discrete action plus its continuous parameters. The engagement task
// reads params[0] only.
struct ActionTuple {
  std::size_t action = 0;
  std::vector<double> params;
};

struct EnvStepResult {
  EnvState state;
  double reward = 0.0;
};

// Reengagement score H(theta) = 2 (exp(-(theta - mu*)^2 / (2 sigma*^2)) - 0.5),
// in (-1, 1] with its maximum at mu*.
double reengagement(double theta, double mu_star, double sigma_star);

// Index of the schedule phase active at `timestep`. Phase i covers
// [start_i, start_i + duration_i).
std::size_t phase_index_at(std::size_t timestep, const EnvConfig& config);

const Phase& current_phase(const EnvState& state, const EnvConfig& config);

// Advances the engagement dynamics by one timestep. The returned reward is
// (1 - lambda) e(t+1) + lambda (e(t+1) - e(t)).
//
// Throws std::invalid_argument when the action index is outside the
// configured action set or a parameter is missing, non-finite or out of
// bounds.
EnvStepResult step(const EnvState& state, const EnvConfig& config, const ActionTuple& action);

// Total number of timesteps covered by one pass over the schedule.
std::size_t schedule_length(const EnvConfig& config);

}  // namespace pax
