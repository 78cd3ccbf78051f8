#ifndef MIMOJAM_OUTAGE_HPP
#define MIMOJAM_OUTAGE_HPP

namespace mimojam {

enum class Scheme { Miso, Simo, Alamouti };

// Antenna layout. Miso requires n_rx == 1, Simo requires n_tx == 1;
// Alamouti uses the full n_tx x n_rx array with diversity order N = n_tx*n_rx.
struct AntennaConfig {
  Scheme scheme;
  int n_tx = 1;
  int n_rx = 1;

  int diversity_order() const { return n_tx * n_rx; }
  void validate() const;
};

// All powers linear (dB conversion happens at the CLI boundary only).
// power_jam == 0 means the jammer is silent. The Alamouti STBC rate is
// fixed at 1 symbol per channel use.
struct LinkBudget {
  double power_tx;
  double power_jam;
  double target_rate;  // bits per channel use

  void validate() const;
};

// Outage probability under an active jammer (power_jam > 0); delegates to
// the no-jamming expression when power_jam == 0, where the jammed form is
// singular.
double outage_with_jamming(const AntennaConfig& config, const LinkBudget& budget);

// Outage probability with the jammer silent: 1 - Gamma(n, a)/Gamma(n).
double outage_without_jamming(const AntennaConfig& config, double power_tx,
                              double target_rate);

// Joint large-power limit with the jam-to-signal ratio eta = P_J/P >= 1
// held fixed.
double asymptotic_outage(const AntennaConfig& config, double eta, double target_rate);

}  // namespace mimojam

#endif
