#include "mimojam/energy_buffer.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mimojam {
namespace {

// (1-r)/(1-r^{B+1}) with r = alpha/zeta, stable on both sides of r = 1.
double finite_empty_prob(double alpha, double zeta, int cap) {
  if (alpha == zeta) return 1.0 / (cap + 1);  // uniform chain, covers the 0/0 corners
  if (zeta == 0.0) return 0.0;                // r = inf: all mass at the top state
  if (alpha == 0.0) return 1.0;               // r = 0: all mass at empty
  const double r = alpha / zeta;
  if (r < 1.0) return (1.0 - r) / (1.0 - std::pow(r, cap + 1));
  const double q = zeta / alpha;  // mirror form avoids overflowing r^{B+1}
  return std::pow(q, cap) * (1.0 - q) / (1.0 - std::pow(q, cap + 1));
}

}  // namespace

void JammerEnergyModel::validate() const {
  if (!(p_jam >= 0.0 && p_jam <= 1.0))
    throw std::invalid_argument("p_jam must be in [0,1]");
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("delta must be in [0,1]");
  if (capacity && *capacity < 1)
    throw std::invalid_argument("finite capacity must be >= 1");
}

double empty_probability_model(const JammerEnergyModel& model) {
  model.validate();
  if (model.p_jam == 0.0) return model.delta == 0.0 ? 1.0 : 0.0;
  if (model.p_jam < model.delta) return 0.0;
  const double alpha = model.birth_rate();
  const double zeta = model.death_rate();
  if (!model.finite()) {
    if (model.p_jam == model.delta) return 0.0;  // r -> 1 limit of 1 - alpha/zeta
    return 1.0 - alpha / zeta;
  }
  return finite_empty_prob(alpha, zeta, *model.capacity);
}

EmptyProbability empty_probability_exact(const JammerEnergyModel& model) {
  model.validate();
  const double alpha = model.birth_rate();
  const double zeta = model.death_rate();
  if (!model.finite()) {
    if (alpha >= zeta) return {0.0, false};
    return {1.0 - alpha / zeta, true};
  }
  return {finite_empty_prob(alpha, zeta, *model.capacity), true};
}

BufferSteadyState steady_state_distribution(const JammerEnergyModel& model) {
  model.validate();
  if (!model.finite())
    throw std::invalid_argument("steady_state_distribution requires finite capacity");
  const int cap = *model.capacity;
  const double alpha = model.birth_rate();
  const double zeta = model.death_rate();
  std::vector<double> w(cap + 1, 0.0);
  if (alpha == zeta) {
    std::fill(w.begin(), w.end(), 1.0);
  } else if (zeta == 0.0) {
    w[cap] = 1.0;
  } else if (alpha == 0.0) {
    w[0] = 1.0;
  } else if (alpha <= zeta) {
    const double r = alpha / zeta;
    for (int i = 0; i <= cap; ++i) w[i] = std::pow(r, i);
  } else {
    const double q = zeta / alpha;  // weight from the top to avoid overflow
    for (int i = 0; i <= cap; ++i) w[i] = std::pow(q, cap - i);
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return {w[0], 1.0 - w[0], std::move(w)};
}

}  // namespace mimojam
