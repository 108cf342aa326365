#include "pax/meta_explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pax {

void MetaConfig::validate() const {
  if (!(tau1 > 1.0)) throw std::invalid_argument("meta: tau1 must exceed 1");
  if (!(tau2 > tau1)) throw std::invalid_argument("meta: tau2 must exceed tau1");
  if (!(mu > 0.0)) throw std::invalid_argument("meta: mu must be positive");
  if (!(f_min > 0.0)) throw std::invalid_argument("meta: f_min must be positive");
  if (!(f_intercept > 0.0)) throw std::invalid_argument("meta: f_intercept must be positive");
  if (!(g_max > 0.0 && g_max <= 20.0)) throw std::invalid_argument("meta: g_max must lie in (0, 20]");
  if (!(g_slope > 0.0)) throw std::invalid_argument("meta: g_slope must be positive");
  if (!std::isfinite(f_slope) || !std::isfinite(g_mid)) throw std::invalid_argument("meta: non-finite F/G coefficient");
}

MetaState MetaState::initial(const MetaConfig& config) {
  MetaState s;
  s.beta = compute_beta(s, config);
  s.sigma = compute_sigma(s, config);
  return s;
}

MetaState update_averages(const MetaState& state, const MetaConfig& config, double r) {
  if (!std::isfinite(r)) throw std::domain_error("meta: non-finite reward");
  MetaState out = state;
  out.r_bar = state.r_bar + (r - state.r_bar) / config.tau1;
  out.r_bbar = state.r_bbar + (out.r_bar - state.r_bbar) / config.tau2;
  return out;
}

double compute_beta(const MetaState& state, const MetaConfig& config) {
  const double x = config.mu * (state.r_bar - state.r_bbar);
  const double beta = std::max(config.f_min, config.f_intercept + config.f_slope * x);
  // f_slope * x can overflow to +inf for absurd reward streams.
  return std::isfinite(beta) ? beta : std::numeric_limits<double>::max();
}

double compute_sigma(const MetaState& state, const MetaConfig& config) {
  const double x = config.mu * (state.r_bar - state.r_bbar);
  const double sigma = config.g_max / (1.0 + std::exp(config.g_slope * (x - config.g_mid)));
  return std::clamp(sigma, config.g_max * 1e-12, std::nextafter(config.g_max, 0.0));
}

MetaState meta_step(const MetaState& state, const MetaConfig& config, double r) {
  MetaState out = update_averages(state, config, r);
  out.beta = compute_beta(out, config);
  out.sigma = compute_sigma(out, config);
  return out;
}

}  // namespace pax
