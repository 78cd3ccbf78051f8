#include "mimojam/link_simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "mimojam/rng.hpp"

namespace mimojam {

int channel_gain_shape(const AntennaConfig& config) {
  config.validate();
  switch (config.scheme) {
    case Scheme::Miso: return config.n_tx;
    case Scheme::Simo: return config.n_rx;
    case Scheme::Alamouti: return config.diversity_order();
  }
  throw std::invalid_argument("unknown scheme");
}

double instantaneous_rate(const AntennaConfig& config, const LinkBudget& budget,
                          const FadingDraw& draw) {
  const double scale = config.scheme == Scheme::Simo
                           ? budget.power_tx
                           : budget.power_tx / config.n_tx;
  const double signal = scale * draw.channel_gain;
  const double jam = budget.power_jam * draw.jam_gain;
  return std::log2(1.0 + signal / (1.0 + jam));
}

MonteCarloEstimate estimate_outage(const AntennaConfig& config, const LinkBudget& budget,
                                   std::uint64_t n_draws, std::uint64_t seed) {
  config.validate();
  budget.validate();
  if (n_draws == 0) throw std::invalid_argument("n_draws must be positive");
  const int shape = channel_gain_shape(config);
  Rng rng(seed);
  std::uint64_t outages = 0;
  for (std::uint64_t i = 0; i < n_draws; ++i) {
    const FadingDraw draw{rng.gamma_int(shape), rng.exponential()};
    if (instantaneous_rate(config, budget, draw) < budget.target_rate) ++outages;
  }
  const double p = static_cast<double>(outages) / static_cast<double>(n_draws);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n_draws)), n_draws, seed};
}

MonteCarloEstimate estimate_broadcast_success(int user, bool both_queues,
                                              const BroadcastConfig& cfg,
                                              std::uint64_t n_draws, std::uint64_t seed) {
  cfg.validate();
  if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
  if (n_draws == 0) throw std::invalid_argument("n_draws must be positive");
  const double power = user == 1 ? cfg.power_1 : cfg.power_2;
  const double other = user == 1 ? cfg.power_2 : cfg.power_1;
  const double gamma = user == 1 ? cfg.gamma_1 : cfg.gamma_2;
  Rng rng(seed);
  std::uint64_t successes = 0;
  for (std::uint64_t i = 0; i < n_draws; ++i) {
    const double h = rng.gamma_int(cfg.n_rx);   // |h_i|^2
    const double g = rng.exponential();         // |g_i|^2
    const bool jam = rng.bernoulli(cfg.p_jam);
    double denom = 1.0;
    if (jam) denom += cfg.power_jam * g;
    if (both_queues) denom += other * h;  // interference shares the channel
    if (power * h / denom >= gamma) ++successes;
  }
  const double p = static_cast<double>(successes) / static_cast<double>(n_draws);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n_draws)), n_draws, seed};
}

}  // namespace mimojam
