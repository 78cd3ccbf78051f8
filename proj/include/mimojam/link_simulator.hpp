#ifndef MIMOJAM_LINK_SIMULATOR_HPP
#define MIMOJAM_LINK_SIMULATOR_HPP

#include <cstdint>

#include "mimojam/broadcast.hpp"
#include "mimojam/outage.hpp"

namespace mimojam {

// One slot's fading realization. channel_gain ~ Gamma(n, 1) with n the
// scheme's diversity shape (|h|^2 with unit-variance complex entries);
// jam_gain ~ Exp(1).
struct FadingDraw {
  double channel_gain;
  double jam_gain;
};

struct MonteCarloEstimate {
  double p_hat;
  double std_err;  // sqrt(p(1-p)/N)
  std::uint64_t n_draws;
  std::uint64_t seed;
};

// Gamma shape of the channel gain for the scheme: n_tx (MISO), n_rx (SIMO),
// n_tx*n_rx (Alamouti).
int channel_gain_shape(const AntennaConfig& config);

// log2(1 + signal/(1 + P_J jam_gain)); signal is (P/n_t) * gain for MISO and
// Alamouti, P * gain for SIMO. STBC rate fixed at 1.
double instantaneous_rate(const AntennaConfig& config, const LinkBudget& budget,
                          const FadingDraw& draw);

// Fraction of seeded fading draws with instantaneous rate below the target
// rate. Deterministic given (seed, n_draws, params).
MonteCarloEstimate estimate_outage(const AntennaConfig& config, const LinkBudget& budget,
                                   std::uint64_t n_draws, std::uint64_t seed);

// Monte Carlo estimate of a broadcast success probability Pr(D_{i/tau}) by
// sampling the raw SNR/SINR/SJNR/SJINR event (interference rides on the same
// channel realization as the signal), independent of the closed form's
// effective-power rearrangement.
MonteCarloEstimate estimate_broadcast_success(int user, bool both_queues,
                                              const BroadcastConfig& cfg,
                                              std::uint64_t n_draws, std::uint64_t seed);

}  // namespace mimojam

#endif
