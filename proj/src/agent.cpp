#include "pax/agent.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace pax {

namespace {

// The engagement task has a single state, encoded one-hot.
constexpr std::size_t kState = 0;
constexpr std::array<double, 1> kFeatures{1.0};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

const char* to_string(ExplorationKind kind) {
  switch (kind) {
    case ExplorationKind::fixed: return "fixed";
    case ExplorationKind::meta: return "meta";
    case ExplorationKind::kalman: return "kalman";
  }
  return "unknown";
}

ExplorationKind parse_exploration_kind(const std::string& name) {
  if (name == "fixed") return ExplorationKind::fixed;
  if (name == "meta") return ExplorationKind::meta;
  if (name == "kalman") return ExplorationKind::kalman;
  throw std::invalid_argument("unknown agent kind '" + name + "' (expected fixed, meta or kalman)");
}

void AgentConfig::validate() const {
  if (param_dim == 0) throw std::invalid_argument("agent: param_dim must be positive");
  q.validate();
  ac.validate();
  switch (variant.kind) {
    case ExplorationKind::fixed:
      if (!(variant.fixed_beta > 0.0)) throw std::invalid_argument("agent: fixed beta must be positive");
      if (!(variant.fixed_sigma > 0.0)) throw std::invalid_argument("agent: fixed sigma must be positive");
      break;
    case ExplorationKind::meta:
      meta.validate();
      break;
    case ExplorationKind::kalman:
      if (!(variant.fixed_beta > 0.0)) throw std::invalid_argument("agent: fixed beta must be positive");
      kalman.validate();
      kalman_sigma.validate();
      break;
  }
}

AgentState AgentState::initial(const AgentConfig& config, const EnvConfig& env, std::uint64_t seed) {
  AgentState s;
  s.q_table = QTable(1, env.num_actions);
  s.critic = CriticParams::zeros(kFeatures.size());
  s.actor = ActorParams(env.num_actions, config.param_dim, kFeatures.size());
  switch (config.variant.kind) {
    case ExplorationKind::fixed: s.controller = std::monostate{}; break;
    case ExplorationKind::meta: s.controller = MetaState::initial(config.meta); break;
    case ExplorationKind::kalman: s.controller = KalmanState(1, env.num_actions, config.kalman.prior_var); break;
  }
  s.rng = RandomStream(seed);
  return s;
}

double current_beta(const AgentState& agent, const AgentConfig& config) {
  if (const auto* meta = std::get_if<MetaState>(&agent.controller)) return meta->beta;
  return config.variant.fixed_beta;
}

std::vector<double> current_sigmas(const AgentState& agent, const AgentConfig& config) {
  const std::size_t k = agent.q_table.num_actions();
  return std::visit(overloaded{
                        [&](const std::monostate&) { return std::vector<double>(k, config.variant.fixed_sigma); },
                        [&](const MetaState& m) { return std::vector<double>(k, m.sigma); },
                        [&](const KalmanState& ks) {
                          std::vector<double> out(k);
                          for (std::size_t a = 0; a < k; ++a)
                            out[a] = action_sigma(ks, config.kalman, kState, a, config.kalman_sigma);
                          return out;
                        },
                    },
                    agent.controller);
}

AgentStepResult agent_step(const AgentState& agent, const EnvState& env, const AgentConfig& config,
                           const EnvConfig& env_config) {
  try {
    AgentStepResult out{agent, env, {}};
    AgentState& next = out.agent;
    StepRecord& rec = out.record;
    const ParamBounds bounds{env_config.param_min, env_config.param_max};
    const auto* kalman = std::get_if<KalmanState>(&agent.controller);

    // 1. discrete action
    const double beta = current_beta(agent, config);
    const std::vector<double> values =
        kalman != nullptr ? bonused_values(*kalman, config.kalman, kState)
                          : std::vector<double>(agent.q_table.row(kState).begin(), agent.q_table.row(kState).end());
    const std::vector<double> probs = softmax_probs(values, beta);
    const std::size_t a = sample_action(probs, next.rng);

    // 2. action parameters
    const std::vector<double> sigmas = current_sigmas(agent, config);
    const std::vector<double> mean = parameter_means(agent.actor, a, kFeatures, bounds);
    const std::vector<double> sampled = sample_parameters(mean, sigmas[a], bounds, next.rng);

    // 3. transition
    const Phase& phase = current_phase(env, env_config);
    rec.phase = phase_index_at(env.timestep, env_config);
    rec.optimal_action = phase.optimal_action;
    rec.optimal_param = phase.optimal_param;
    const EnvStepResult transition = step(env, env_config, ActionTuple{a, sampled});
    out.env = transition.state;
    const double r = transition.reward;

    // 4. discrete Q-learning
    if (kalman == nullptr) next.q_table = q_update(agent.q_table, config.q, kState, a, r, kState);

    // 5. critic and actor share one TD error computed before either moves
    const double v_curr = critic_value(agent.critic, kFeatures);
    const double v_next = critic_value(agent.critic, kFeatures);
    const double delta = td_error(r, v_next, v_curr, config.ac.gamma);
    next.critic = update_critic(agent.critic, config.ac, delta, kFeatures);
    next.actor = update_actor(agent.actor, config.ac, delta, a, sampled, mean, kFeatures);

    // 6. exploration controller
    std::visit(overloaded{
                   [](std::monostate&) {},
                   [&](MetaState& m) { m = meta_step(m, config.meta, r); },
                   [&](KalmanState& ks) { ks = kalman_step(ks, config.kalman, kState, a, r, kState); },
               },
               next.controller);

    // 7. telemetry
    rec.t = env.timestep;
    rec.action = a;
    rec.params = sampled;
    rec.param_means.reserve(env_config.num_actions * config.param_dim);
    for (std::size_t b = 0; b < env_config.num_actions; ++b) {
      const auto m = parameter_means(next.actor, b, kFeatures, bounds);
      rec.param_means.insert(rec.param_means.end(), m.begin(), m.end());
    }
    rec.engagement = out.env.engagement;
    rec.reward = r;
    rec.beta = beta;
    rec.sigma = sigmas[a];
    rec.r_bar = std::numeric_limits<double>::quiet_NaN();
    rec.r_bbar = std::numeric_limits<double>::quiet_NaN();
    std::visit(overloaded{
                   [&](const std::monostate&) {
                     const auto row = next.q_table.row(kState);
                     rec.q_values.assign(row.begin(), row.end());
                   },
                   [&](const MetaState& m) {
                     const auto row = next.q_table.row(kState);
                     rec.q_values.assign(row.begin(), row.end());
                     rec.r_bar = m.r_bar;
                     rec.r_bbar = m.r_bbar;
                   },
                   [&](const KalmanState& ks) {
                     const auto row = ks.q_row(kState);
                     rec.q_values.assign(row.begin(), row.end());
                     rec.action_sigmas = sigmas;
                     rec.cov_diag.resize(env_config.num_actions);
                     for (std::size_t b = 0; b < env_config.num_actions; ++b) rec.cov_diag[b] = ks.variance(kState, b);
                   },
               },
               next.controller);
    return out;
  } catch (const StepError&) {
    throw;
  } catch (const std::exception& e) {
    throw StepError(env.timestep, e.what());
  }
}

}  // namespace pax
