#ifndef MIMOJAM_LATENCY_HPP
#define MIMOJAM_LATENCY_HPP

namespace mimojam {

// Geo/Geo/1 steady-state metrics, all in slot units. Only defined on the
// stable set 0 < lambda < mu <= 1; lambda >= mu raises an error rather than
// returning an infinity, so optimizers see the boundary as infeasible.
struct LatencyReport {
  double queue_len;    // average queue length (packets)
  double delay_tx;     // 1/mu
  double delay_queue;  // Little's-law queueing delay
  double delay_total;  // delay_tx + delay_queue
  double aaoi;         // time-average age of information
};

double avg_queue_length(double lambda, double mu);  // lambda(1-lambda)/(mu-lambda)
double avg_delay(double lambda, double mu);         // 1/mu + (1-lambda)/(mu-lambda)
double aaoi(double lambda, double mu);  // 1/lambda + (1-lambda)/(mu-lambda) - lambda/mu^2 + lambda/mu

LatencyReport latency_report(double lambda, double mu);

}  // namespace mimojam

#endif
