#include "mimojam/outage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mimojam/gamma.hpp"

namespace mimojam {
namespace {

struct BranchParams {
  int shape;     // gamma shape of the channel gain
  double point;  // threshold argument a
  double scale;  // c in the jamming-term denominator (1 + c/P_J)^shape
};

// Per-scheme (n, a, c): Miso (n_t, thr*n_t/P, P/(n_t*thr)),
// Simo (n_r, thr/P, P/thr), Alamouti (N, thr/beta, beta/thr) with beta = P/n_t.
BranchParams branch_params(const AntennaConfig& config, double power_tx,
                           double target_rate) {
  const double thr = std::exp2(target_rate) - 1.0;
  switch (config.scheme) {
    case Scheme::Miso:
      return {config.n_tx, thr * config.n_tx / power_tx, power_tx / (config.n_tx * thr)};
    case Scheme::Simo:
      return {config.n_rx, thr / power_tx, power_tx / thr};
    case Scheme::Alamouti: {
      const double beta = power_tx / config.n_tx;
      return {config.diversity_order(), thr / beta, beta / thr};
    }
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace

void AntennaConfig::validate() const {
  if (n_tx < 1 || n_rx < 1)
    throw std::invalid_argument("antenna counts must be >= 1");
  if (scheme == Scheme::Miso && n_rx != 1)
    throw std::invalid_argument("MISO requires n_rx == 1");
  if (scheme == Scheme::Simo && n_tx != 1)
    throw std::invalid_argument("SIMO requires n_tx == 1");
}

void LinkBudget::validate() const {
  if (!(power_tx > 0.0) || !std::isfinite(power_tx))
    throw std::invalid_argument("power_tx must be positive and finite");
  if (!(power_jam >= 0.0) || !std::isfinite(power_jam))
    throw std::invalid_argument("power_jam must be non-negative and finite");
  if (!(target_rate > 0.0) || !std::isfinite(target_rate))
    throw std::invalid_argument("target_rate must be positive and finite");
}

double outage_with_jamming(const AntennaConfig& config, const LinkBudget& budget) {
  config.validate();
  budget.validate();
  if (budget.power_jam == 0.0)
    return outage_without_jamming(config, budget.power_tx, budget.target_rate);
  const BranchParams b = branch_params(config, budget.power_tx, budget.target_rate);
  const double q = regularized_upper_gamma(b.shape, b.point);
  const double jam = shifted_exp_gamma_ratio(b.shape, b.point, 1.0 / budget.power_jam, b.scale);
  return std::clamp(1.0 - q + jam, 0.0, 1.0);
}

double outage_without_jamming(const AntennaConfig& config, double power_tx,
                              double target_rate) {
  config.validate();
  LinkBudget{power_tx, 0.0, target_rate}.validate();
  const BranchParams b = branch_params(config, power_tx, target_rate);
  return std::clamp(1.0 - regularized_upper_gamma(b.shape, b.point), 0.0, 1.0);
}

double asymptotic_outage(const AntennaConfig& config, double eta, double target_rate) {
  config.validate();
  if (!(eta >= 1.0)) throw std::domain_error("asymptotic limit assumes eta >= 1");
  if (!(target_rate > 0.0)) throw std::invalid_argument("target_rate must be positive");
  const double thr = std::exp2(target_rate) - 1.0;
  switch (config.scheme) {
    case Scheme::Miso:
      return std::pow(1.0 + 1.0 / (eta * config.n_tx * thr), -config.n_tx);
    case Scheme::Simo:
      return std::pow(1.0 + 1.0 / (eta * thr), -config.n_rx);
    case Scheme::Alamouti:
      return std::pow(1.0 + 1.0 / (eta * config.n_tx * thr), -config.diversity_order());
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace mimojam
