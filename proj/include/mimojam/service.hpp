#ifndef MIMOJAM_SERVICE_HPP
#define MIMOJAM_SERVICE_HPP

#include "mimojam/energy_buffer.hpp"
#include "mimojam/outage.hpp"

namespace mimojam {

struct ServiceContext {
  AntennaConfig antenna;
  LinkBudget budget;
  JammerEnergyModel jammer;
};

// Bernoulli packet arrivals at the transmit queue.
struct TrafficModel {
  double lambda;  // in (0, 1)
  void validate() const;
};

// Fraction of slots that are actually jammed: p_jam * Pr(buffer non-empty),
// with the buffer steady state taken from the modeled case split.
double jam_probability(const JammerEnergyModel& jammer);

// Long-run per-slot success probability for the head-of-line packet:
// mu = (1 - pj) (1 - p_out_nojam) + pj (1 - p_out_jam), pj = jam_probability.
double average_service_rate(const ServiceContext& ctx);

// Loynes criterion, strict: lambda < mu.
bool is_stable(const ServiceContext& ctx, const TrafficModel& traffic);

}  // namespace mimojam

#endif
