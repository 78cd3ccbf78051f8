#include "mimojam/gamma.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace mimojam;

namespace {

// Adaptive Simpson quadrature of the defining integral, independent of the
// series implementation under test.
double simpson(double (*f)(double, int), int n, double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a, n) + 4.0 * f(m, n) + f(b, n));
}

double adaptive(double (*f)(double, int), int n, double a, double b, double whole,
                double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, n, a, m);
  const double right = simpson(f, n, m, b);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, n, a, m, left, 0.5 * tol, depth - 1) +
         adaptive(f, n, m, b, right, 0.5 * tol, depth - 1);
}

double integrand(double t, int n) { return std::pow(t, n - 1) * std::exp(-t); }

// Gamma(n, x) by quadrature over [x, x + tail] with a tail long enough that
// the truncation is negligible at the tolerances used here.
double quad_upper_gamma(int n, double x) {
  const double hi = x + 60.0 + 12.0 * n;
  return adaptive(integrand, n, x, hi, simpson(integrand, n, x, hi), 1e-14, 40);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST_CASE("upper incomplete gamma: collapse cases") {
  for (double x : {0.0, 0.3, 1.0, 4.5, 20.0})
    CHECK(upper_incomplete_gamma_int(1, x) == doctest::Approx(std::exp(-x)).epsilon(1e-14));
  for (int n : {1, 2, 3, 5, 10, 32, 64})
    CHECK(upper_incomplete_gamma_int(n, 0.0) ==
          doctest::Approx(factorial(n - 1)).epsilon(1e-14));
}

TEST_CASE("upper incomplete gamma matches quadrature oracle") {
  // frozen spot value: quadrature of t^2 e^{-t} over [2, inf) gives 10 e^{-2}
  CHECK(quad_upper_gamma(3, 2.0) == doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-10));
  CHECK(upper_incomplete_gamma_int(3, 2.0) ==
        doctest::Approx(1.3533528323661270).epsilon(1e-12));

  for (int n : {1, 2, 3, 4, 8, 12, 16}) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 10.0, 25.0, 50.0}) {
      const double series = upper_incomplete_gamma_int(n, x);
      const double quad = quad_upper_gamma(n, x);
      CHECK(series == doctest::Approx(quad).epsilon(1e-10));
    }
  }
}

TEST_CASE("regularized upper gamma: examples and range") {
  for (int n : {1, 2, 7, 64}) CHECK(regularized_upper_gamma(n, 0.0) == 1.0);
  CHECK(regularized_upper_gamma(1, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
  // oracle: quad_upper_gamma(4, 3)/3! = 0.647232...
  CHECK(regularized_upper_gamma(4, 3.0) ==
        doctest::Approx(quad_upper_gamma(4, 3.0) / factorial(3)).epsilon(1e-10));
  CHECK(regularized_upper_gamma(4, 3.0) == doctest::Approx(0.6472318887822313).epsilon(1e-12));
}

TEST_CASE("gamma monotonicity: decreasing in x, increasing in n") {
  for (int n : {1, 2, 5, 16}) {
    double prev = upper_incomplete_gamma_int(n, 0.0);
    CHECK(prev <= factorial(n - 1));
    for (double x = 0.5; x <= 40.0; x += 0.5) {
      const double cur = upper_incomplete_gamma_int(n, x);
      CHECK(cur > 0.0);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  for (double x : {0.1, 1.0, 5.0, 20.0})
    for (int n = 1; n < 30; ++n)
      CHECK(upper_incomplete_gamma_int(n + 1, x) > upper_incomplete_gamma_int(n, x));
}

TEST_CASE("shifted ratio: hand cases") {
  // n=1, a=0: e^w e^{-w} / (1 + w) with w = c = 1
  CHECK(shifted_exp_gamma_ratio(1, 0.0, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  // oracle: e^2 Gamma(2, 2.5) / (Gamma(2) (1+6)^2) via quadrature
  const double oracle = std::exp(2.0) * quad_upper_gamma(2, 2.5) / 49.0;
  CHECK(shifted_exp_gamma_ratio(2, 0.5, 2.0, 3.0) == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(shifted_exp_gamma_ratio(2, 0.5, 2.0, 3.0) ==
        doctest::Approx(0.04332361855090239).epsilon(1e-12));
}

TEST_CASE("shifted ratio: decays like 1/w for a very weak jammer") {
  for (int n : {1, 4, 16, 64})
    for (double a : {0.0, 0.5, 3.0})
      for (double c : {0.1, 1.0, 50.0}) {
        const double v6 = shifted_exp_gamma_ratio(n, a, 1e6, c);
        const double v8 = shifted_exp_gamma_ratio(n, a, 1e8, c);
        CHECK(std::isfinite(v6));
        CHECK(v6 < 1.0);
        // leading term e^{-a} w^{n-1} / ((n-1)! (cw)^n) is O(1/w)
        CHECK(v8 == doctest::Approx(v6 * 1e-2).epsilon(1e-3));
      }
}

TEST_CASE("shifted ratio equals naive composition where the naive path is finite") {
  for (int n : {1, 2, 3, 6, 10}) {
    for (double a : {0.0, 0.2, 2.0, 8.0}) {
      for (double w : {0.05, 1.0, 10.0, 50.0}) {
        for (double c : {0.2, 1.0, 7.0}) {
          const double naive = std::exp(w) * upper_incomplete_gamma_int(n, a + w) /
                               (factorial(n - 1) * std::pow(1.0 + c * w, n));
          CHECK(shifted_exp_gamma_ratio(n, a, w, c) ==
                doctest::Approx(naive).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("shifted ratio stays finite where the naive path overflows") {
  // e^{w} alone overflows past w ~ 709
  const double v = shifted_exp_gamma_ratio(4, 0.1, 1000.0, 2.0);
  CHECK(std::isfinite(v));
  CHECK(v >= 0.0);
}

TEST_CASE("gamma domain errors") {
  CHECK_THROWS_AS(upper_incomplete_gamma_int(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(upper_incomplete_gamma_int(-3, 1.0), std::domain_error);
  CHECK_THROWS_AS(upper_incomplete_gamma_int(65, 1.0), std::domain_error);
  CHECK_NOTHROW(upper_incomplete_gamma_int(65, 1.0, 128));  // cap is configurable
  CHECK_THROWS_AS(upper_incomplete_gamma_int(2, -0.5), std::domain_error);
  CHECK_THROWS_AS(regularized_upper_gamma(2, -1.0), std::domain_error);
  CHECK_THROWS_AS(shifted_exp_gamma_ratio(2, 1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(shifted_exp_gamma_ratio(2, 1.0, 1.0, 0.0), std::domain_error);
}
