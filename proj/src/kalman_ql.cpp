#include "pax/kalman_ql.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pax/kernels/kernels.hpp"

namespace pax {

void KalmanConfig::validate() const {
  if (!(process_noise >= 0.0)) throw std::invalid_argument("kalman: process_noise must be non-negative");
  if (!(obs_noise > 0.0)) throw std::invalid_argument("kalman: obs_noise must be positive");
  if (!(prior_var > 0.0)) throw std::invalid_argument("kalman: prior_var must be positive");
  if (!(eta >= 0.0)) throw std::invalid_argument("kalman: eta must be non-negative");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("kalman: gamma must lie in [0, 1)");
}

double IncreasingSigmoid::operator()(double v) const {
  const double y = g_max / (1.0 + std::exp(-slope * (v - midpoint)));
  return std::clamp(y, g_max * 1e-12, std::nextafter(g_max, 0.0));
}

void IncreasingSigmoid::validate() const {
  if (!(g_max > 0.0 && g_max <= 20.0)) throw std::invalid_argument("kalman sigma: g_max must lie in (0, 20]");
  if (!(slope > 0.0)) throw std::invalid_argument("kalman sigma: slope must be positive");
  if (!std::isfinite(midpoint)) throw std::invalid_argument("kalman sigma: non-finite midpoint");
}

KalmanState::KalmanState(std::size_t num_states, std::size_t num_actions, double prior_var)
    : num_states_(num_states),
      num_actions_(num_actions),
      q_mean_(num_states * num_actions, 0.0),
      cov_(num_states * num_actions * num_states * num_actions, 0.0) {
  for (std::size_t i = 0; i < num_cells(); ++i) cov(i, i) = prior_var;
}

KalmanState kalman_step(const KalmanState& state, const KalmanConfig& config, std::size_t s, std::size_t a,
                        double r, std::size_t s_next) {
  if (!std::isfinite(r)) throw std::domain_error("kalman: non-finite reward");
  if (s >= state.num_states() || s_next >= state.num_states() || a >= state.num_actions())
    throw std::out_of_range("kalman: state or action index out of range");

  KalmanState out = state;
  const std::size_t n = out.num_cells();
  const std::size_t k = out.cell(s, a);

  if (config.process_noise > 0.0) {
    for (std::size_t i = 0; i < n; ++i) out.cov(i, i) += config.process_noise;
  }

  const auto next_row = out.q_row(s_next);
  const double target = r + config.gamma * *std::max_element(next_row.begin(), next_row.end());
  const double innovation = target - out.q_mean()[k];
  const double innovation_var = out.cov(k, k) + config.obs_noise;

  // P is symmetric, so its k-th column equals its k-th row.
  std::vector<double> row_k(out.cov_data().begin() + static_cast<std::ptrdiff_t>(k * n),
                            out.cov_data().begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  std::vector<double> gain(n);
  for (std::size_t i = 0; i < n; ++i) gain[i] = row_k[i] / innovation_var;

  kernels::axpy(innovation, gain, out.q_mean());
  kernels::rank1_subtract(out.cov_data(), n, gain, row_k);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (out.cov(i, j) + out.cov(j, i));
      out.cov(i, j) = avg;
      out.cov(j, i) = avg;
    }
  }

  for (double q : out.q_mean()) {
    if (!std::isfinite(q)) throw std::domain_error("kalman: filter diverged");
  }
  return out;
}

double exploration_bonus(const KalmanState& state, const KalmanConfig& config, std::size_t s, std::size_t a) {
  return config.eta * state.variance(s, a);
}

std::vector<double> bonused_values(const KalmanState& state, const KalmanConfig& config, std::size_t s) {
  std::vector<double> out(state.q_row(s).begin(), state.q_row(s).end());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] += exploration_bonus(state, config, s, a);
  return out;
}

double action_sigma(const KalmanState& state, const KalmanConfig&, std::size_t s, std::size_t a,
                    const IncreasingSigmoid& g) {
  return g(state.variance(s, a));
}

}  // namespace pax
