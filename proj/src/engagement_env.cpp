#include "pax/engagement_env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pax {

void EnvConfig::validate() const {
  if (num_actions == 0) throw std::invalid_argument("environment: num_actions must be positive");
  if (!(param_min < param_max)) throw std::invalid_argument("environment: param_min must be below param_max");
  if (!(eta1 > 0.0 && eta1 < 1.0)) throw std::invalid_argument("environment: eta1 must lie in (0, 1)");
  if (!(eta2 > 0.0 && eta2 < 1.0)) throw std::invalid_argument("environment: eta2 must lie in (0, 1)");
  if (!(e_min < e_init && e_init < e_max))
    throw std::invalid_argument("environment: require e_min < e_init < e_max");
  if (!(sigma_star > 0.0)) throw std::invalid_argument("environment: sigma_star must be positive");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("environment: lambda must lie in [0, 1]");
  if (schedule.empty()) throw std::invalid_argument("environment: schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Phase& p = schedule[i];
    const std::string where = "environment: schedule phase " + std::to_string(i + 1);
    if (p.optimal_action >= num_actions) throw std::invalid_argument(where + " names an unknown action");
    if (!(p.optimal_param >= param_min && p.optimal_param <= param_max))
      throw std::invalid_argument(where + " has its optimum outside the parameter bounds");
    if (p.duration == 0) throw std::invalid_argument(where + " has zero duration");
  }
}

EnvState EnvState::initial(const EnvConfig& config) {
  return EnvState{config.e_init, 0, 0};
}

double reengagement(double theta, double mu_star, double sigma_star) {
  const double d = theta - mu_star;
  const double h = 2.0 * (std::exp(-(d * d) / (2.0 * sigma_star * sigma_star)) - 0.5);
  // the tail rounds to exactly -1 beyond ~8.6 sigma*
  return std::max(h, std::nextafter(-1.0, 0.0));
}

std::size_t schedule_length(const EnvConfig& config) {
  std::size_t total = 0;
  for (const Phase& p : config.schedule) total += p.duration;
  return total;
}

std::size_t phase_index_at(std::size_t timestep, const EnvConfig& config) {
  const std::size_t total = schedule_length(config);
  if (timestep >= total) {
    if (config.schedule_mode == ScheduleMode::clamp) return config.schedule.size() - 1;
    timestep %= total;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i < config.schedule.size(); ++i) {
    start += config.schedule[i].duration;
    if (timestep < start) return i;
  }
  return config.schedule.size() - 1;
}

const Phase& current_phase(const EnvState& state, const EnvConfig& config) {
  return config.schedule.at(phase_index_at(state.timestep, config));
}

EnvStepResult step(const EnvState& state, const EnvConfig& config, const ActionTuple& action) {
  if (action.action >= config.num_actions) {
    throw std::invalid_argument("environment: action " + std::to_string(action.action + 1) +
                                " is outside the configured set of " +
                                std::to_string(config.num_actions) + " actions");
  }
  if (action.params.empty()) throw std::invalid_argument("environment: action carries no parameter");
  for (double p : action.params) {
    if (!std::isfinite(p) || p < config.param_min || p > config.param_max)
      throw std::invalid_argument("environment: action parameter outside [param_min, param_max]");
  }

  const Phase& phase = current_phase(state, config);
  const double e = state.engagement;
  double next = 0.0;
  if (action.action == phase.optimal_action) {
    const double h = reengagement(action.params.front(), phase.optimal_param, config.sigma_star);
    if (h >= 0.0) {
      next = e + config.eta1 * (config.e_max - e) * h;
    } else {
      next = e - config.eta2 * (config.e_min - e) * h;
    }
  } else {
    next = e + config.eta2 * (config.e_min - e);
  }

  EnvStepResult out;
  out.state.engagement = next;
  out.state.timestep = state.timestep + 1;
  out.state.phase_index = phase_index_at(out.state.timestep, config);
  out.reward = (1.0 - config.lambda) * next + config.lambda * (next - e);
  return out;
}

}  // namespace pax
