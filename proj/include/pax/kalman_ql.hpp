#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pax {

struct KalmanConfig {
  double process_noise = 0.0;  // random-walk variance added to every cell per step
  double obs_noise = 1.0;      // variance R of the bootstrapped target
  double prior_var = 10.0;     // initial diagonal of the covariance
  double eta = 1.0;            // weight of the exploration bonus
  double gamma = 0.9;

  void validate() const;
};

// Increasing logistic used to turn a variance into a parameter-exploration
// width: g_max / (1 + exp(-slope * (v - midpoint))), kept strictly inside
// (0, g_max).
struct IncreasingSigmoid {
  double g_max = 20.0;
  double slope = 1.0;
  double midpoint = 5.0;

  double operator()(double v) const;
  void validate() const;
};

// Gaussian belief over the Q-values of every (state, action) cell: mean
// vector plus full covariance, row-major.
class KalmanState {
 public:
  KalmanState() = default;
  KalmanState(std::size_t num_states, std::size_t num_actions, double prior_var);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }
  std::size_t num_cells() const { return num_states_ * num_actions_; }
  std::size_t cell(std::size_t s, std::size_t a) const { return s * num_actions_ + a; }

  std::span<const double> q_mean() const { return q_mean_; }
  std::span<double> q_mean() { return q_mean_; }
  std::span<const double> q_row(std::size_t s) const {
    return std::span<const double>(q_mean_).subspan(s * num_actions_, num_actions_);
  }

  double cov(std::size_t i, std::size_t j) const { return cov_[i * num_cells() + j]; }
  double& cov(std::size_t i, std::size_t j) { return cov_[i * num_cells() + j]; }
  std::span<const double> cov_data() const { return cov_; }
  std::span<double> cov_data() { return cov_; }

  double variance(std::size_t s, std::size_t a) const { return cov(cell(s, a), cell(s, a)); }

  friend bool operator==(const KalmanState&, const KalmanState&) = default;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  std::vector<double> q_mean_;
  std::vector<double> cov_;
};

// One filter step for the transition (s, a, r, s_next). The target
// y = r + gamma * max_a' Q(s_next, a') is read as a noisy observation of
// Q(s, a) through the one-hot row h:
//   P <- P + process_noise * I
//   K = P h / (h'P h + R)
//   Q <- Q + K (y - Q(s, a))
//   P <- (I - K h') P, then symmetrized.
// Throws std::domain_error on non-finite input, std::out_of_range on bad
// indices.
KalmanState kalman_step(const KalmanState& state, const KalmanConfig& config, std::size_t s, std::size_t a,
                        double r, std::size_t s_next);

// eta * Var[Q(s, a)]
double exploration_bonus(const KalmanState& state, const KalmanConfig& config, std::size_t s, std::size_t a);

// Q(s, .) + bonus(s, .), the input to the softmax in the Kalman variant.
std::vector<double> bonused_values(const KalmanState& state, const KalmanConfig& config, std::size_t s);

// Action-specific exploration width G(Var[Q(s, a)]).
double action_sigma(const KalmanState& state, const KalmanConfig& config, std::size_t s, std::size_t a,
                    const IncreasingSigmoid& g);

}  // namespace pax
