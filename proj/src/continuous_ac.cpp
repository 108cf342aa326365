#include "pax/continuous_ac.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pax {

namespace {

void require_features(std::size_t expected, std::size_t got, const char* who) {
  if (expected != got) throw std::invalid_argument(std::string(who) + ": feature dimension mismatch");
}

}  // namespace

void ACConfig::validate() const {
  if (!(alpha_c > 0.0 && alpha_c <= 1.0)) throw std::invalid_argument("actor-critic: alpha_c must lie in (0, 1]");
  if (!(alpha_a > 0.0 && alpha_a <= 1.0)) throw std::invalid_argument("actor-critic: alpha_a must lie in (0, 1]");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("actor-critic: gamma must lie in [0, 1)");
}

ActorParams::ActorParams(std::size_t num_actions, std::size_t param_dim, std::size_t num_features)
    : num_actions_(num_actions),
      param_dim_(param_dim),
      num_features_(num_features),
      w_(num_actions * param_dim * num_features, 0.0) {}

std::span<const double> ActorParams::weights(std::size_t a, std::size_t i) const {
  return std::span<const double>(w_).subspan((a * param_dim_ + i) * num_features_, num_features_);
}

std::span<double> ActorParams::weights(std::size_t a, std::size_t i) {
  return std::span<double>(w_).subspan((a * param_dim_ + i) * num_features_, num_features_);
}

double critic_value(const CriticParams& critic, std::span<const double> features) {
  require_features(critic.weights.size(), features.size(), "critic");
  return std::inner_product(features.begin(), features.end(), critic.weights.begin(), 0.0);
}

double td_error(double r, double v_next, double v_curr, double gamma) {
  return r + gamma * v_next - v_curr;
}

CriticParams update_critic(const CriticParams& critic, const ACConfig& config, double delta,
                           std::span<const double> features) {
  require_features(critic.weights.size(), features.size(), "critic");
  if (!std::isfinite(delta)) throw std::domain_error("critic: non-finite TD error");
  CriticParams out = critic;
  for (std::size_t k = 0; k < features.size(); ++k) out.weights[k] += config.alpha_c * delta * features[k];
  return out;
}

std::vector<double> raw_parameter_means(const ActorParams& actor, std::size_t a,
                                        std::span<const double> features) {
  require_features(actor.num_features(), features.size(), "actor");
  if (a >= actor.num_actions()) throw std::out_of_range("actor: action index out of range");
  std::vector<double> means(actor.param_dim());
  for (std::size_t i = 0; i < means.size(); ++i) {
    const auto w = actor.weights(a, i);
    means[i] = std::inner_product(features.begin(), features.end(), w.begin(), 0.0);
  }
  return means;
}

std::vector<double> parameter_means(const ActorParams& actor, std::size_t a,
                                    std::span<const double> features, ParamBounds bounds) {
  auto means = raw_parameter_means(actor, a, features);
  for (double& m : means) m = std::clamp(m, bounds.min, bounds.max);
  return means;
}

ActorParams update_actor(const ActorParams& actor, const ACConfig& config, double delta, std::size_t a,
                         std::span<const double> theta_sampled, std::span<const double> theta_mean,
                         std::span<const double> features) {
  require_features(actor.num_features(), features.size(), "actor");
  if (a >= actor.num_actions()) throw std::out_of_range("actor: action index out of range");
  if (theta_sampled.size() != actor.param_dim() || theta_mean.size() != actor.param_dim())
    throw std::invalid_argument("actor: parameter dimension mismatch");
  if (!std::isfinite(delta)) throw std::domain_error("actor: non-finite TD error");

  ActorParams out = actor;
  for (std::size_t i = 0; i < actor.param_dim(); ++i) {
    const double step = config.alpha_a * delta * (theta_sampled[i] - theta_mean[i]);
    auto w = out.weights(a, i);
    for (std::size_t k = 0; k < features.size(); ++k) w[k] += step * features[k];
  }
  return out;
}

std::vector<double> sample_parameters(std::span<const double> theta_mean, double sigma, ParamBounds bounds,
                                      RandomStream& rng) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("sample_parameters: sigma must be positive and finite");
  std::vector<double> out(theta_mean.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(theta_mean[i] + sigma * rng.normal(), bounds.min, bounds.max);
  }
  return out;
}

}  // namespace pax
