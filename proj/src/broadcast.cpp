#include "mimojam/broadcast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mimojam/gamma.hpp"

namespace mimojam {
namespace {

// Success probability of the point-to-point SIMO event with the given
// effective signal power: (1-pj) Pr(SNR >= g) + pj Pr(SJNR >= g).
double success_core(int n_rx, double power, double gamma, double power_jam, double p_jam) {
  if (!(power > 0.0)) return 0.0;
  const double a = gamma / power;
  const double q = regularized_upper_gamma(n_rx, a);
  if (p_jam == 0.0 || power_jam == 0.0) return q;
  const double jam = shifted_exp_gamma_ratio(n_rx, a, 1.0 / power_jam, power / gamma);
  return std::clamp(q - p_jam * jam, 0.0, 1.0);
}

void check_user(int user) {
  if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
}

}  // namespace

void BroadcastConfig::validate() const {
  if (n_rx < 1) throw std::invalid_argument("n_rx must be >= 1");
  if (!(power_1 > 0.0) || !(power_2 > 0.0))
    throw std::invalid_argument("per-queue powers must be positive");
  if (!(gamma_1 > 0.0) || !(gamma_2 > 0.0))
    throw std::invalid_argument("decoding thresholds must be positive");
  if (!(power_jam >= 0.0)) throw std::invalid_argument("power_jam must be non-negative");
  if (!(p_jam >= 0.0 && p_jam <= 1.0)) throw std::invalid_argument("p_jam must be in [0,1]");
}

double success_prob_single(int user, const BroadcastConfig& cfg) {
  cfg.validate();
  check_user(user);
  const double power = user == 1 ? cfg.power_1 : cfg.power_2;
  const double gamma = user == 1 ? cfg.gamma_1 : cfg.gamma_2;
  return success_core(cfg.n_rx, power, gamma, cfg.power_jam, cfg.p_jam);
}

double success_prob_both(int user, const BroadcastConfig& cfg) {
  cfg.validate();
  check_user(user);
  const double gamma = user == 1 ? cfg.gamma_1 : cfg.gamma_2;
  const double effective = user == 1 ? cfg.power_1 - cfg.gamma_1 * cfg.power_2
                                     : cfg.power_2 - cfg.gamma_2 * cfg.power_1;
  return success_core(cfg.n_rx, effective, gamma, cfg.power_jam, cfg.p_jam);
}

StabilityRegion stability_region(const BroadcastConfig& cfg) {
  StabilityRegion r;
  r.p_1_single = success_prob_single(1, cfg);
  r.p_2_single = success_prob_single(2, cfg);
  r.p_1_both = success_prob_both(1, cfg);
  r.p_2_both = success_prob_both(2, cfg);
  r.degenerate = r.p_1_single == 0.0 || r.p_2_single == 0.0 ||
                 r.p_1_both == 0.0 || r.p_2_both == 0.0;
  return r;
}

bool StabilityRegion::contains(double lambda_1, double lambda_2) const {
  if (lambda_1 < 0.0 || lambda_2 < 0.0) return false;
  const bool in_r1 = p_1_single > 0.0 && p_2_both > 0.0 && lambda_2 < p_2_both &&
                     lambda_1 / p_1_single +
                             (p_1_single - p_1_both) / (p_1_single * p_2_both) * lambda_2 <
                         1.0;
  if (in_r1) return true;
  const bool in_r2 = p_2_single > 0.0 && p_1_both > 0.0 && lambda_1 < p_1_both &&
                     lambda_2 / p_2_single +
                             (p_2_single - p_2_both) / (p_2_single * p_1_both) * lambda_1 <
                         1.0;
  return in_r2;
}

// R1's oblique boundary runs from (Pr(D_{1/1}), 0) to (Pr(D_{1/1,2}), Pr(D_{2/1,2})),
// where the lambda_2 cap takes over; R2 mirrors it.
std::vector<std::pair<double, double>> StabilityRegion::region_1_vertices() const {
  return {{0.0, 0.0}, {p_1_single, 0.0}, {p_1_both, p_2_both}, {0.0, p_2_both}};
}

std::vector<std::pair<double, double>> StabilityRegion::region_2_vertices() const {
  return {{0.0, 0.0}, {p_1_both, 0.0}, {p_1_both, p_2_both}, {0.0, p_2_single}};
}

std::vector<std::pair<double, double>> StabilityRegion::union_vertices() const {
  // both sub-regions share the corner (Pr(D_{1/1,2}), Pr(D_{2/1,2}))
  return {{0.0, 0.0}, {p_1_single, 0.0}, {p_1_both, p_2_both}, {0.0, p_2_single}};
}

bool is_stable_pair(double lambda_1, double lambda_2, const BroadcastConfig& cfg) {
  return stability_region(cfg).contains(lambda_1, lambda_2);
}

}  // namespace mimojam
