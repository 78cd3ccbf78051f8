#include "mimojam/system_simulator.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "mimojam/link_simulator.hpp"
#include "mimojam/rng.hpp"

namespace mimojam {
namespace {

// Second, independent age accounting: linear ramps between resets are summed
// with the arithmetic-series formula instead of slot-by-slot addition.
struct SawtoothArea {
  double area = 0.0;
  double ramp_start = 0.0;
  std::uint64_t ramp_len = 0;

  void sample(double age, bool reset_this_slot) {
    if (reset_this_slot || ramp_len == 0) {
      flush();
      ramp_start = age;
      ramp_len = 1;
    } else {
      ++ramp_len;
    }
  }
  void flush() {
    if (ramp_len == 0) return;
    const double m = static_cast<double>(ramp_len);
    area += m * ramp_start + m * (m - 1.0) / 2.0;
    ramp_len = 0;
  }
};

}  // namespace

MetricsReport run_slots(const SimulationParams& params, std::uint64_t n_slots,
                        std::uint64_t seed, double warmup_fraction) {
  params.antenna.validate();
  params.budget.validate();
  params.jammer.validate();
  params.traffic.validate();
  if (n_slots == 0) throw std::invalid_argument("n_slots must be positive");
  if (!(warmup_fraction >= 0.0 && warmup_fraction < 1.0))
    throw std::invalid_argument("warmup_fraction must be in [0,1)");

  const std::uint64_t warmup = static_cast<std::uint64_t>(warmup_fraction * n_slots);
  const int shape = channel_gain_shape(params.antenna);
  const bool finite = params.jammer.finite();
  const std::uint64_t cap = finite ? static_cast<std::uint64_t>(*params.jammer.capacity) : 0;

  Rng rng(seed);
  std::deque<std::uint64_t> queue;  // generation slot per packet
  std::uint64_t buffer = 0;
  std::uint64_t head_attempts = 0;  // transmission slots spent on the current head
  double age = 1.0;

  std::uint64_t counted = 0, jam_slots = 0, empty_slots = 0;
  std::uint64_t attempts = 0, successes = 0, delivered = 0;
  double qlen_sum = 0.0, delay_sum = 0.0, age_sum = 0.0;
  SawtoothArea sawtooth;

  for (std::uint64_t t = 0; t < n_slots; ++t) {
    const bool count = t >= warmup;
    const bool empty_at_decision = buffer == 0;

    // jam coin first; an attempt at an empty buffer fails and costs the
    // slot's energy arrival
    const bool coin = rng.bernoulli(params.jammer.p_jam);
    const bool energy = rng.bernoulli(params.jammer.delta);
    bool jammed = false;
    if (coin) {
      if (buffer > 0) {
        jammed = true;
        --buffer;
        if (energy && (!finite || buffer < cap)) ++buffer;
      }
    } else if (energy && (!finite || buffer < cap)) {
      ++buffer;
    }

    if (count) {
      ++counted;
      if (jammed) ++jam_slots;
      if (empty_at_decision) ++empty_slots;
      qlen_sum += static_cast<double>(queue.size());
    }

    if (rng.bernoulli(params.traffic.lambda)) queue.push_back(t);

    // the channel outcome exists every slot whether or not a packet uses it;
    // sampling it unconditionally keeps mu_hat free of queue-occupancy bias
    const FadingDraw draw{rng.gamma_int(shape), rng.exponential()};
    const LinkBudget slot_budget{params.budget.power_tx,
                                 jammed ? params.budget.power_jam : 0.0,
                                 params.budget.target_rate};
    const bool success =
        instantaneous_rate(params.antenna, slot_budget, draw) >= params.budget.target_rate;
    if (count) {
      ++attempts;
      if (success) ++successes;
    }

    // serve only packets generated in an earlier slot
    bool reset = false;
    if (!queue.empty() && queue.front() < t) {
      ++head_attempts;
      if (success) {
        // queueing sojourn (slot starts spent in the system) plus the
        // packet's own transmission slots, matching the analytical
        // occupancy-plus-transmission decomposition of the delay
        const double delay = static_cast<double>((t - queue.front()) + head_attempts);
        age = static_cast<double>(t - queue.front() + 1);
        queue.pop_front();
        head_attempts = 0;
        reset = true;
        if (count) {
          ++delivered;
          delay_sum += delay;
        }
      }
    }

    if (count) {
      age_sum += age;
      sawtooth.sample(age, reset);
    }
    age += 1.0;
  }
  sawtooth.flush();

  MetricsReport r{};
  r.mu_hat = attempts ? static_cast<double>(successes) / static_cast<double>(attempts) : 0.0;
  r.delay_hat = delivered ? delay_sum / static_cast<double>(delivered) : 0.0;
  r.aaoi_hat = counted ? age_sum / static_cast<double>(counted) : 0.0;
  r.aaoi_sawtooth = counted ? sawtooth.area / static_cast<double>(counted) : 0.0;
  r.qlen_hat = counted ? qlen_sum / static_cast<double>(counted) : 0.0;
  r.jam_fraction = counted ? static_cast<double>(jam_slots) / static_cast<double>(counted) : 0.0;
  r.empty_fraction =
      counted ? static_cast<double>(empty_slots) / static_cast<double>(counted) : 0.0;
  r.n_slots = n_slots;
  r.n_delivered = delivered;
  r.seed = seed;
  r.unstable_warning =
      params.traffic.lambda >=
      average_service_rate({params.antenna, params.budget, params.jammer});
  return r;
}

ReplicationSummary run_replications(const SimulationParams& params, std::uint64_t n_reps,
                                    std::uint64_t n_slots, std::uint64_t base_seed,
                                    double warmup_fraction) {
  if (n_reps < 2) throw std::invalid_argument("n_reps must be >= 2");
  ReplicationSummary out;
  out.replications.reserve(n_reps);
  for (std::uint64_t i = 0; i < n_reps; ++i)
    out.replications.push_back(
        run_slots(params, n_slots, substream_seed(base_seed, i), warmup_fraction));

  const auto fields = {&MetricsReport::mu_hat,       &MetricsReport::delay_hat,
                       &MetricsReport::aaoi_hat,     &MetricsReport::aaoi_sawtooth,
                       &MetricsReport::qlen_hat,     &MetricsReport::jam_fraction,
                       &MetricsReport::empty_fraction};
  out.mean = MetricsReport{};
  out.stddev = MetricsReport{};
  const double n = static_cast<double>(n_reps);
  for (auto f : fields) {
    double s = 0.0;
    for (const auto& rep : out.replications) s += rep.*f;
    const double m = s / n;
    double sq = 0.0;
    for (const auto& rep : out.replications) sq += (rep.*f - m) * (rep.*f - m);
    out.mean.*f = m;
    out.stddev.*f = std::sqrt(sq / (n - 1.0));
  }
  out.mean.n_slots = n_slots;
  out.mean.seed = base_seed;
  for (const auto& rep : out.replications) {
    out.mean.n_delivered += rep.n_delivered;
    out.mean.unstable_warning = out.mean.unstable_warning || rep.unstable_warning;
  }
  return out;
}

}  // namespace mimojam
