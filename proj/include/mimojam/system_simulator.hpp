#ifndef MIMOJAM_SYSTEM_SIMULATOR_HPP
#define MIMOJAM_SYSTEM_SIMULATOR_HPP

#include <cstdint>
#include <vector>

#include "mimojam/service.hpp"

namespace mimojam {

// Time-averaged statistics from one slot-level run, after the warm-up
// discard. delay_hat counts a packet arriving and served at consecutive
// slot boundaries as 2 slots (one waiting slot plus one transmission slot).
struct MetricsReport {
  double mu_hat;           // per-slot channel success fraction (sampled every slot)
  double delay_hat;        // mean system delay per delivered packet
  double aaoi_hat;         // time-average receiver age
  double aaoi_sawtooth;    // same quantity via per-delivery sawtooth areas
  double qlen_hat;         // time-average queue length at slot start
  double jam_fraction;     // slots actually jammed
  double empty_fraction;   // buffer empty at slot start
  std::uint64_t n_slots;
  std::uint64_t n_delivered;
  std::uint64_t seed;
  bool unstable_warning;   // lambda >= analytical mu for these parameters
};

struct SimulationParams {
  AntennaConfig antenna;
  LinkBudget budget;
  JammerEnergyModel jammer;
  TrafficModel traffic;
};

// Slot order: (1) jam coin, buffer update (a jam attempt at an empty buffer
// fails and discards that slot's energy arrival); (2) packet arrival;
// (3) service attempt on a head-of-line packet from an earlier slot;
// (4) age increment. This ordering reproduces the buffer chain transition
// probabilities (0->1 w.p. delta(1-p_jam), i->i-1 w.p. (1-delta)p_jam) and
// Pr(jam) = p_jam Pr(buffer non-empty) at the slot start simultaneously.
MetricsReport run_slots(const SimulationParams& params, std::uint64_t n_slots,
                        std::uint64_t seed, double warmup_fraction = 0.1);

struct ReplicationSummary {
  MetricsReport mean;     // per-metric sample means (counters summed)
  MetricsReport stddev;   // per-metric sample standard deviations
  std::vector<MetricsReport> replications;
};

// Independent replications on split RNG streams derived from base_seed.
ReplicationSummary run_replications(const SimulationParams& params, std::uint64_t n_reps,
                                    std::uint64_t n_slots, std::uint64_t base_seed,
                                    double warmup_fraction = 0.1);

}  // namespace mimojam

#endif
