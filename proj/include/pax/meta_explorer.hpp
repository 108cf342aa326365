#pragma once

namespace pax {

// Noiseless meta-learning of the exploration pair (beta, sigma) from the gap
// between a short-term and a long-term reward average.
//
//   F(x) = max(f_min, f_intercept + f_slope * x)              (inverse temperature)
//   G(x) = g_max / (1 + exp(g_slope * (x - g_mid)))          (Gaussian width)
//
// with x = mu * (r_bar - r_bbar). G falls as x grows, so a performance drop
// (short-term average below long-term) widens parameter exploration while F
// lowers beta.
struct MetaConfig {
  double tau1 = 10.0;
  double tau2 = 100.0;
  double mu = 1.0;
  double f_intercept = 4.0;
  double f_slope = 4.0;
  double f_min = 0.01;
  double g_max = 20.0;
  double g_slope = 2.0;
  double g_mid = -0.7;

  void validate() const;
};

struct MetaState {
  double r_bar = 0.0;
  double r_bbar = 0.0;
  double beta = 0.0;
  double sigma = 0.0;

  // Zero averages, with beta and sigma evaluated from them.
  static MetaState initial(const MetaConfig& config);

  friend bool operator==(const MetaState&, const MetaState&) = default;
};

// r_bar += (r - r_bar) / tau1, then r_bbar += (r_bar - r_bbar) / tau2 with the
// updated r_bar. beta and sigma are left untouched.
MetaState update_averages(const MetaState& state, const MetaConfig& config, double r);

double compute_beta(const MetaState& state, const MetaConfig& config);

// Always strictly inside (0, g_max), even when the logistic saturates.
double compute_sigma(const MetaState& state, const MetaConfig& config);

// Full per-step controller update: averages, then beta and sigma.
MetaState meta_step(const MetaState& state, const MetaConfig& config, double r);

}  // namespace pax
