#include "mimojam/aoi_optimizer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mimojam/latency.hpp"

namespace mimojam {
namespace {

constexpr double kBoundaryEps = 1e-9;

// d(AAoI)/d(lambda): (mu-1)/mu^2 + (1-mu)/(mu-lambda)^2 - 1/lambda^2.
double aaoi_derivative(double lambda, double mu) {
  const double g = mu - lambda;
  return (mu - 1.0) / (mu * mu) + (1.0 - mu) / (g * g) - 1.0 / (lambda * lambda);
}

void check_mu(double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::domain_error("mu must be in (0,1]");
}

OptimizationResult make_result(double lambda, double mu, Binding binding) {
  return {lambda, aaoi(lambda, mu), avg_delay(lambda, mu), binding};
}

double quartic_value(double lambda, double mu) {
  const double l2 = lambda * lambda;
  return l2 * l2 * (mu - 1.0) + l2 * lambda * (2.0 * mu - 2.0 * mu * mu) -
         l2 * mu * mu + 2.0 * lambda * mu * mu * mu - mu * mu * mu * mu;
}

}  // namespace

OptimizationResult optimal_lambda_unconstrained(double mu) {
  check_mu(mu);
  double lo = kBoundaryEps * mu;
  double hi = mu * (1.0 - kBoundaryEps);
  // derivative is -infinity-like at lambda -> 0+; if it never turns positive
  // the minimizer is the stability boundary (mu == 1 case)
  if (!(aaoi_derivative(hi, mu) > 0.0))
    return make_result(hi, mu, Binding::StabilityBound);
  if (!(aaoi_derivative(lo, mu) < 0.0))
    throw std::runtime_error("AAoI derivative not negative near lambda = 0");
  for (int i = 0; i < 200 && hi - lo > 1e-16 * mu; ++i) {
    const double mid = 0.5 * (lo + hi);
    (aaoi_derivative(mid, mu) < 0.0 ? lo : hi) = mid;
  }
  return make_result(0.5 * (lo + hi), mu, Binding::Interior);
}

OptimizationResult optimal_lambda_delay_constrained(double mu, double d_th) {
  check_mu(mu);
  if (!(d_th > 0.0)) throw std::domain_error("d_th must be positive");
  double lambda_max;
  if (mu == 1.0) {
    // D(lambda) == 2 for all lambda when mu == 1
    if (d_th < 2.0) throw std::domain_error("infeasible delay bound: d_th < 2/mu");
    lambda_max = mu * (1.0 - kBoundaryEps);
  } else {
    // (1-lambda)/(mu-lambda) = d_th - 1/mu  =>  lambda = (T mu - 1)/(T - 1)
    const double t = d_th - 1.0 / mu;
    lambda_max = (t * mu - 1.0) / (t - 1.0);
    if (!(lambda_max > 0.0))
      throw std::domain_error("infeasible delay bound: d_th <= 2/mu");
    lambda_max = std::min(lambda_max, mu * (1.0 - kBoundaryEps));
  }
  const OptimizationResult unconstrained = optimal_lambda_unconstrained(mu);
  if (unconstrained.lambda_opt <= lambda_max) return unconstrained;
  return make_result(lambda_max, mu, Binding::DelayBound);
}

std::vector<double> quartic_roots(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("quartic_roots requires 0 < mu < 1");
  // monic coefficients lambda^4 + b3 l^3 + b2 l^2 + b1 l + b0
  const double lead = mu - 1.0;
  const double b3 = (2.0 * mu - 2.0 * mu * mu) / lead;
  const double b2 = -mu * mu / lead;
  const double b1 = 2.0 * mu * mu * mu / lead;
  const double b0 = -mu * mu * mu * mu / lead;
  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  companion(0, 3) = -b0;
  companion(1, 3) = -b1;
  companion(2, 3) = -b2;
  companion(3, 3) = -b3;
  companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;
  const Eigen::Vector4cd eig = companion.eigenvalues();

  const double max_coef = std::max({std::abs(lead), std::abs(lead * b3), std::abs(lead * b2),
                                    std::abs(lead * b1), std::abs(lead * b0)});
  std::vector<double> roots;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(eig[i].imag()) > 1e-7 * (1.0 + std::abs(eig[i].real()))) continue;
    double r = eig[i].real();
    for (int it = 0; it < 50; ++it) {  // Newton polish
      const double f = quartic_value(r, mu);
      const double df = 4.0 * r * r * r * (mu - 1.0) +
                        3.0 * r * r * (2.0 * mu - 2.0 * mu * mu) -
                        2.0 * r * mu * mu + 2.0 * mu * mu * mu;
      if (df == 0.0) break;
      const double step = f / df;
      r -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
    }
    if (std::abs(quartic_value(r, mu)) / max_coef >= 1e-9) continue;
    const bool dup = std::any_of(roots.begin(), roots.end(),
                                 [&](double x) { return std::abs(x - r) < 1e-9; });
    if (!dup) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace mimojam
