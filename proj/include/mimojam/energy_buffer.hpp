#ifndef MIMOJAM_ENERGY_BUFFER_HPP
#define MIMOJAM_ENERGY_BUFFER_HPP

#include <optional>
#include <vector>

namespace mimojam {

// Jammer-side birth-death chain: one energy chunk arrives per slot with
// probability delta, one chunk is spent per jam attempt (probability p_jam,
// only when the buffer is non-empty). capacity == nullopt means an
// unbounded buffer.
struct JammerEnergyModel {
  double p_jam;
  double delta;
  std::optional<int> capacity;

  double birth_rate() const { return delta * (1.0 - p_jam); }   // alpha
  double death_rate() const { return (1.0 - delta) * p_jam; }   // zeta
  bool finite() const { return capacity.has_value(); }
  void validate() const;
};

struct BufferSteadyState {
  double empty_prob;
  double nonempty_prob;
  std::vector<double> distribution;  // pi_0..pi_B, finite capacity only
};

struct EmptyProbability {
  double value;
  bool stationary;  // false: unbounded buffer with birth >= death, no proper limit
};

// Modeled Pr(buffer empty): 0 when p_jam < delta (the chain drifts up and
// almost never empties); otherwise 1 - alpha/zeta (unbounded) or the ratio form
// (1-r)/(1-r^{B+1}) with r = alpha/zeta, with the r -> 1 limit 1/(B+1).
// p_jam == 0 under the "else" branch is the degenerate frozen chain: the
// convention here is 1 when delta == 0 and 0 otherwise.
double empty_probability_model(const JammerEnergyModel& model);

// Exact stationary empty probability of the birth-death chain, valid for
// any r including r > 1 (finite capacity). For an unbounded buffer with
// birth >= death there is no proper stationary distribution; the value 0 is
// returned with stationary == false.
EmptyProbability empty_probability_exact(const JammerEnergyModel& model);

// Full stationary distribution pi_i = pi_0 r^i (finite capacity only).
BufferSteadyState steady_state_distribution(const JammerEnergyModel& model);

}  // namespace mimojam

#endif
