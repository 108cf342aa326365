#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pax/random.hpp"

namespace pax {

struct ACConfig {
  double alpha_c = 0.1;   // critic learning rate
  double alpha_a = 0.01;  // actor learning rate
  double gamma = 0.9;

  void validate() const;
};

struct ParamBounds {
  double min = -100.0;
  double max = 100.0;
};

// Linear state-value approximator V(s) = <weights, phi(s)>.
struct CriticParams {
  std::vector<double> weights;

  static CriticParams zeros(std::size_t num_features) { return {std::vector<double>(num_features, 0.0)}; }
  friend bool operator==(const CriticParams&, const CriticParams&) = default;
};

// Linear actor: the mean of parameter i of action a is
// theta_i^a(s) = <w[a][i], phi(s)>. Every action carries `param_dim`
// parameters.
class ActorParams {
 public:
  ActorParams() = default;
  ActorParams(std::size_t num_actions, std::size_t param_dim, std::size_t num_features);

  std::size_t num_actions() const { return num_actions_; }
  std::size_t param_dim() const { return param_dim_; }
  std::size_t num_features() const { return num_features_; }

  std::span<const double> weights(std::size_t a, std::size_t i) const;
  std::span<double> weights(std::size_t a, std::size_t i);

  friend bool operator==(const ActorParams&, const ActorParams&) = default;

 private:
  std::size_t num_actions_ = 0;
  std::size_t param_dim_ = 0;
  std::size_t num_features_ = 0;
  std::vector<double> w_;
};

double critic_value(const CriticParams& critic, std::span<const double> features);

// delta = r + gamma * v_next - v_curr
double td_error(double r, double v_next, double v_curr, double gamma);

// w += alpha_c * delta * dV/dw, with dV/dw = features.
CriticParams update_critic(const CriticParams& critic, const ACConfig& config, double delta,
                           std::span<const double> features);

// Unclamped linear read-out of the parameter means of action `a`.
std::vector<double> raw_parameter_means(const ActorParams& actor, std::size_t a,
                                        std::span<const double> features);

// Read-out clamped to the legal parameter range; this is theta^a(s).
std::vector<double> parameter_means(const ActorParams& actor, std::size_t a,
                                    std::span<const double> features, ParamBounds bounds);

// w[a][i] += alpha_a * delta * (sampled_i - mean_i) * dtheta_i/dw, for every
// sign of delta. Only the weights of action `a` change.
ActorParams update_actor(const ActorParams& actor, const ACConfig& config, double delta, std::size_t a,
                         std::span<const double> theta_sampled, std::span<const double> theta_mean,
                         std::span<const double> features);

// Gaussian exploration: each component ~ Normal(mean_i, sigma^2), clamped to
// bounds. Consumes two uniform draws per component.
std::vector<double> sample_parameters(std::span<const double> theta_mean, double sigma, ParamBounds bounds,
                                      RandomStream& rng);

}  // namespace pax
