#ifndef MIMOJAM_AOI_OPTIMIZER_HPP
#define MIMOJAM_AOI_OPTIMIZER_HPP

#include <vector>

namespace mimojam {

enum class Binding { Interior, DelayBound, StabilityBound };

struct OptimizationResult {
  double lambda_opt;
  double aaoi_opt;
  double delay_at_opt;
  Binding binding;
};

// Arrival rate minimizing the AAoI subject only to queue stability. The
// stationary point is found by bracketed bisection on the AAoI derivative
// over (0, mu); for mu == 1 the quartic stationarity condition degenerates
// to (lambda-1)^2 = 0 and the minimizer sits at the stability boundary,
// reported as lambda = mu(1 - 1e-9) with binding = StabilityBound.
OptimizationResult optimal_lambda_unconstrained(double mu);

// Same objective with the extra constraint D(lambda) <= d_th. D is
// non-decreasing in lambda, so the feasible set is (0, lambda_max] with
// lambda_max in closed form; throws if d_th is below the minimum
// achievable delay 2/mu.
OptimizationResult optimal_lambda_delay_constrained(double mu, double d_th);

// All real roots of the stationarity quartic
// lambda^4(mu-1) + lambda^3(2mu - 2mu^2) - lambda^2 mu^2 + 2 lambda mu^3 - mu^4 = 0,
// each polished and verified by back-substitution. Requires 0 < mu < 1.
std::vector<double> quartic_roots(double mu);

}  // namespace mimojam

#endif
