#include "mimojam/latency.hpp"

#include <stdexcept>

namespace mimojam {
namespace {

void check_stable(double lambda, double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::domain_error("mu must be in (0,1]");
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (!(lambda < mu)) throw std::domain_error("unstable queue: lambda >= mu");
}

}  // namespace

double avg_queue_length(double lambda, double mu) {
  check_stable(lambda, mu);
  return lambda * (1.0 - lambda) / (mu - lambda);
}

double avg_delay(double lambda, double mu) {
  check_stable(lambda, mu);
  return 1.0 / mu + (1.0 - lambda) / (mu - lambda);
}

double aaoi(double lambda, double mu) {
  check_stable(lambda, mu);
  return 1.0 / lambda + (1.0 - lambda) / (mu - lambda) - lambda / (mu * mu) + lambda / mu;
}

LatencyReport latency_report(double lambda, double mu) {
  const double q = avg_queue_length(lambda, mu);
  const double dq = q / lambda;
  return {q, 1.0 / mu, dq, 1.0 / mu + dq, aaoi(lambda, mu)};
}

}  // namespace mimojam
