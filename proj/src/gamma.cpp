#include "mimojam/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mimojam {
namespace {

constexpr double kLogSwitch = 300.0;

void check_args(int n, double x, int max_shape) {
  if (n < 1) throw std::domain_error("gamma shape must be a positive integer");
  if (n > max_shape) throw std::domain_error("gamma shape exceeds configured maximum");
  if (!(x >= 0.0)) throw std::domain_error("gamma point must be non-negative");
}

// log( sum_{k=0}^{n-1} x^k / k! ) via log-sum-exp, safe for any x.
double log_partial_exp_sum(int n, double x) {
  if (x == 0.0) return 0.0;
  const double lx = std::log(x);
  double lmax = 0.0;
  for (int k = 1; k < n; ++k) lmax = std::max(lmax, k * lx - std::lgamma(k + 1.0));
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += std::exp(k * lx - std::lgamma(k + 1.0) - lmax);
  return lmax + std::log(acc);
}

// sum_{k=0}^{n-1} x^k / k!; caller guarantees terms fit in double.
double partial_exp_sum(int n, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

}  // namespace

double regularized_upper_gamma(int n, double x, int max_shape) {
  check_args(n, x, max_shape);
  double q;
  if (x <= kLogSwitch) {
    // term logs are bounded by x here, so the naive sum cannot overflow
    q = std::exp(-x) * partial_exp_sum(n, x);
  } else {
    q = std::exp(log_partial_exp_sum(n, x) - x);
  }
  return std::clamp(q, 0.0, 1.0);
}

double upper_incomplete_gamma_int(int n, double x, int max_shape) {
  return regularized_upper_gamma(n, x, max_shape) * std::tgamma(static_cast<double>(n));
}

double shifted_exp_gamma_ratio(int n, double a, double inv_pj, double c, int max_shape) {
  check_args(n, a, max_shape);
  if (!(inv_pj > 0.0)) throw std::domain_error("inv_pj must be positive");
  if (!(c > 0.0)) throw std::domain_error("c must be positive");
  const double y = a + inv_pj;
  const double log_denom = n * std::log1p(c * inv_pj);
  double v;
  if (y <= kLogSwitch && log_denom <= kLogSwitch) {
    v = std::exp(-a) * partial_exp_sum(n, y) / std::exp(log_denom);
  } else {
    v = std::exp(-a + log_partial_exp_sum(n, y) - log_denom);
  }
  return std::max(v, 0.0);
}

}  // namespace mimojam
