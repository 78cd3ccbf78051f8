#include "mimojam/service.hpp"

#include <stdexcept>

namespace mimojam {

void TrafficModel::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("lambda must be in (0,1)");
}

double jam_probability(const JammerEnergyModel& jammer) {
  return jammer.p_jam * (1.0 - empty_probability_model(jammer));
}

double average_service_rate(const ServiceContext& ctx) {
  const double p_nojam = outage_without_jamming(ctx.antenna, ctx.budget.power_tx,
                                                ctx.budget.target_rate);
  const double p_jam = outage_with_jamming(ctx.antenna, ctx.budget);
  const double w = jam_probability(ctx.jammer);
  return (1.0 - w) * (1.0 - p_nojam) + w * (1.0 - p_jam);
}

bool is_stable(const ServiceContext& ctx, const TrafficModel& traffic) {
  traffic.validate();
  return traffic.lambda < average_service_rate(ctx);
}

}  // namespace mimojam
