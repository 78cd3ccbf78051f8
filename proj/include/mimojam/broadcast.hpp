#ifndef MIMOJAM_BROADCAST_HPP
#define MIMOJAM_BROADCAST_HPP

#include <utility>
#include <vector>

namespace mimojam {

// 2-user SIMO broadcast channel under a jammer with an unbounded energy
// buffer and delta > p_jam (the jam state is then simply Bernoulli(p_jam)).
// Interference is treated as noise; gamma_i = 2^{R_i} - 1.
struct BroadcastConfig {
  int n_rx;
  double power_1;
  double power_2;
  double gamma_1;
  double gamma_2;
  double power_jam;
  double p_jam;

  void validate() const;
};

// Pr(D_{i/i}): receiver i decodes while the other queue is silent.
double success_prob_single(int user, const BroadcastConfig& cfg);

// Pr(D_{i/1,2}): both queues transmit; the effective power P_i - gamma_i P_j
// replaces P_i throughout, and the probability is 0 when that is <= 0.
double success_prob_both(int user, const BroadcastConfig& cfg);

// Union R1 u R2 of the two dominant-system regions, stored analytically via
// the four success probabilities (the boundaries are straight lines).
struct StabilityRegion {
  double p_1_single;  // Pr(D_{1/1})
  double p_2_single;  // Pr(D_{2/2})
  double p_1_both;    // Pr(D_{1/1,2})
  double p_2_both;    // Pr(D_{2/1,2})
  bool degenerate;    // some success probability is 0; region collapses to axis segments

  bool contains(double lambda_1, double lambda_2) const;

  // Ordered boundary vertices, for plotting/CSV export.
  std::vector<std::pair<double, double>> region_1_vertices() const;
  std::vector<std::pair<double, double>> region_2_vertices() const;
  std::vector<std::pair<double, double>> union_vertices() const;
};

StabilityRegion stability_region(const BroadcastConfig& cfg);

bool is_stable_pair(double lambda_1, double lambda_2, const BroadcastConfig& cfg);

}  // namespace mimojam

#endif
