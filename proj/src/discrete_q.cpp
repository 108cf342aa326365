#include "pax/discrete_q.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pax {

void QConfig::validate() const {
  if (!(alpha_q >= 0.0 && alpha_q <= 1.0)) throw std::invalid_argument("q-learning: alpha_q must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("q-learning: gamma must lie in [0, 1)");
}

QTable::QTable(std::size_t num_states, std::size_t num_actions)
    : num_states_(num_states), num_actions_(num_actions), values_(num_states * num_actions, 0.0) {}

QTable q_update(const QTable& table, const QConfig& config, std::size_t s, std::size_t a,
                double r, std::size_t s_next) {
  if (!std::isfinite(r)) throw std::domain_error("q-learning: non-finite reward");
  if (s >= table.num_states() || s_next >= table.num_states() || a >= table.num_actions())
    throw std::out_of_range("q-learning: state or action index out of range");

  const auto next_row = table.row(s_next);
  const double best_next = *std::max_element(next_row.begin(), next_row.end());
  QTable out = table;
  out(s, a) = table(s, a) + config.alpha_q * (r + config.gamma * best_next - table(s, a));
  return out;
}

std::vector<double> softmax_probs(std::span<const double> q_row, double beta) {
  if (q_row.empty()) throw std::invalid_argument("softmax: empty value row");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("softmax: beta must be positive and finite");

  const double top = *std::max_element(q_row.begin(), q_row.end());
  std::vector<double> p(q_row.size());
  double total = 0.0;
  for (std::size_t j = 0; j < q_row.size(); ++j) {
    p[j] = std::exp(beta * (q_row[j] - top));
    total += p[j];
  }
  for (double& x : p) x /= total;
  return p;
}

std::size_t sample_action(std::span<const double> probs, RandomStream& rng) {
  if (probs.empty()) throw std::invalid_argument("sample_action: empty distribution");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw std::invalid_argument("sample_action: degenerate probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("sample_action: probabilities do not sum to 1");

  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < probs.size(); ++j) {
    if (probs[j] <= 0.0) continue;
    last_positive = j;
    cumulative += probs[j];
    if (u < cumulative) return j;
  }
  // Rounding can leave the cumulative sum a hair below u.
  return last_positive;
}

}  // namespace pax
