#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pax/random.hpp"

namespace pax {

struct QConfig {
  double alpha_q = 0.1;
  double gamma = 0.9;

  void validate() const;
};

// Tabular action values Q(s, a), row-major by state. Zero-initialized.
class QTable {
 public:
  QTable() = default;
  QTable(std::size_t num_states, std::size_t num_actions);

  std::size_t num_states() const { return num_states_; }
  std::size_t num_actions() const { return num_actions_; }

  double operator()(std::size_t s, std::size_t a) const { return values_[s * num_actions_ + a]; }
  double& operator()(std::size_t s, std::size_t a) { return values_[s * num_actions_ + a]; }

  std::span<const double> row(std::size_t s) const {
    return std::span<const double>(values_).subspan(s * num_actions_, num_actions_);
  }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t num_states_ = 0;
  std::size_t num_actions_ = 0;
  std::vector<double> values_;
};

// One Q-learning backup of cell (s, a):
//   Q(s,a) += alpha_q * (r + gamma * max_a' Q(s_next, a') - Q(s,a)).
// Throws std::domain_error on a non-finite reward and std::out_of_range on
// bad indices.
QTable q_update(const QTable& table, const QConfig& config, std::size_t s, std::size_t a,
                double r, std::size_t s_next);

// Boltzmann distribution exp(beta Q_j) / sum_a exp(beta Q_a), evaluated
// with the row maximum subtracted so large beta cannot overflow.
std::vector<double> softmax_probs(std::span<const double> q_row, double beta);

// Inverse-CDF draw from `probs` using exactly one uniform variate.
// Throws std::invalid_argument for empty, negative, NaN or unnormalized input.
std::size_t sample_action(std::span<const double> probs, RandomStream& rng);

}  // namespace pax
