#ifndef MIMOJAM_GAMMA_HPP
#define MIMOJAM_GAMMA_HPP

namespace mimojam {

// Largest integer shape accepted by default; factorials beyond this break
// the naive double-precision path used for cross-checks.
inline constexpr int kMaxGammaShape = 64;

// Upper incomplete gamma Gamma(n, x) for integer shape n >= 1, via the
// exact finite series (n-1)! e^{-x} sum_{k<n} x^k/k!.
double upper_incomplete_gamma_int(int n, double x, int max_shape = kMaxGammaShape);

// Gamma(n, x) / Gamma(n), in [0, 1].
double regularized_upper_gamma(int n, double x, int max_shape = kMaxGammaShape);

// e^{w} Gamma(n, a + w) / (Gamma(n) (1 + c w)^n) with w = inv_pj, evaluated
// without forming e^{w}: the exponential cancels inside the series, leaving
// e^{-a} sum_{k<n} (a+w)^k/k! / (1 + c w)^n. Switches to log-space once any
// term's log exceeds 300, so it stays finite for w -> large (weak jammer).
double shifted_exp_gamma_ratio(int n, double a, double inv_pj, double c,
                               int max_shape = kMaxGammaShape);

}  // namespace mimojam

#endif
