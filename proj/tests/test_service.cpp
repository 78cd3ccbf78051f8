#include "mimojam/service.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"

using namespace mimojam;

namespace {
const AntennaConfig kSimo2{Scheme::Simo, 1, 2};
const LinkBudget kBudget{100.0, 100.0, 1.0};
}  // namespace

TEST_CASE("inert jammer and constant jammer") {
  const double p_woj = outage_without_jamming(kSimo2, kBudget.power_tx, kBudget.target_rate);
  const double p_j = outage_with_jamming(kSimo2, kBudget);

  // p_J = 0: mu = 1 - p_out without jamming
  CHECK(average_service_rate({kSimo2, kBudget, {0.0, 0.5, std::nullopt}}) ==
        doctest::Approx(1.0 - p_woj).epsilon(1e-14));

  // p_J = 1, delta = 1: jammer always disrupts
  CHECK(average_service_rate({kSimo2, kBudget, {1.0, 1.0, std::nullopt}}) ==
        doctest::Approx(1.0 - p_j).epsilon(1e-14));
}

TEST_CASE("mu is a convex combination of the two success probabilities") {
  const double p_woj = outage_without_jamming(kSimo2, kBudget.power_tx, kBudget.target_rate);
  const double p_j = outage_with_jamming(kSimo2, kBudget);
  const double lo = std::min(1.0 - p_woj, 1.0 - p_j);
  const double hi = std::max(1.0 - p_woj, 1.0 - p_j);
  for (double pj = 0.0; pj <= 1.0; pj += 0.05)
    for (double d = 0.0; d <= 1.0; d += 0.05) {
      const double mu = average_service_rate({kSimo2, kBudget, {pj, d, std::nullopt}});
      CHECK(mu >= lo - 1e-12);
      CHECK(mu <= hi + 1e-12);
    }
}

TEST_CASE("monotonicity in jammer-side resources") {
  double prev = 1.0;
  for (double pjpow = 0.0; pjpow <= 200.0; pjpow += 2.0) {  // non-increasing in P_J
    const double mu = average_service_rate(
        {kSimo2, {100.0, pjpow, 1.0}, {0.7, 0.6, std::nullopt}});
    CHECK(mu <= prev + 1e-12);
    prev = mu;
  }
  prev = 1.0;
  for (double d = 0.0; d <= 1.0; d += 0.01) {  // non-increasing in delta
    const double mu = average_service_rate({kSimo2, kBudget, {0.7, d, std::nullopt}});
    CHECK(mu <= prev + 1e-12);
    prev = mu;
  }
  prev = 1.0;
  for (int cap = 1; cap <= 60; ++cap) {  // non-increasing in B
    const double mu = average_service_rate({kSimo2, kBudget, {0.7, 0.6, cap}});
    CHECK(mu <= prev + 1e-12);
    prev = mu;
  }
  // non-increasing in p_J while the jammer is not energy-limited (p_J <= delta);
  // past that point the energy constraint reverses the trend
  prev = 1.0;
  for (double pj = 0.0; pj <= 0.6; pj += 0.01) {
    const double mu = average_service_rate({kSimo2, kBudget, {pj, 0.6, std::nullopt}});
    CHECK(mu <= prev + 1e-12);
    prev = mu;
  }
}

TEST_CASE("finite and unbounded buffers coincide when p_J < delta") {
  for (int cap : {1, 2, 10})
    for (double pj : {0.1, 0.3, 0.55}) {
      const double fin = average_service_rate({kSimo2, kBudget, {pj, 0.6, cap}});
      const double inf = average_service_rate({kSimo2, kBudget, {pj, 0.6, std::nullopt}});
      CHECK(fin == inf);  // exact equality: both cases use Pr(B!=0) = 1
    }
}

TEST_CASE("continuity across p_J = delta for the unbounded buffer") {
  const double at = average_service_rate({kSimo2, kBudget, {0.6, 0.6, std::nullopt}});
  const double below = average_service_rate({kSimo2, kBudget, {0.6 - 1e-12, 0.6, std::nullopt}});
  CHECK(at == doctest::Approx(below).epsilon(1e-12));
}

TEST_CASE("finite buffer never serves worse than unbounded when p_J > delta") {
  const double inf = average_service_rate({kSimo2, kBudget, {0.7, 0.6, std::nullopt}});
  double prev = 1.0;
  for (int cap = 1; cap <= 200; ++cap) {
    const double fin = average_service_rate({kSimo2, kBudget, {0.7, 0.6, cap}});
    CHECK(fin >= inf - 1e-12);
    CHECK(fin <= prev + 1e-12);
    prev = fin;
  }
  CHECK(std::abs(prev - inf) < 1e-6);  // B = 200 has converged
}

TEST_CASE("stability predicate is strict") {
  const ServiceContext ctx{kSimo2, kBudget, {0.7, 0.6, std::nullopt}};
  const double mu = average_service_rate(ctx);
  CHECK(is_stable(ctx, {mu * 0.5}));
  CHECK_FALSE(is_stable(ctx, {mu}));  // boundary lambda = mu is unstable
  CHECK_FALSE(is_stable(ctx, {0.999999}));
  CHECK(is_stable(ctx, {1e-6}));
}
