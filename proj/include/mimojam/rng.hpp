#ifndef MIMOJAM_RNG_HPP
#define MIMOJAM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace mimojam {

// splitmix64 step; used both to whiten user seeds and to derive independent
// substream seeds for parallel replications.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t s = base_seed ^ (0xa0761d6478bd642full * (index + 1));
  return splitmix64(s);
}

// Seeded stream of the variates the simulators need. mt19937_64 output is
// specified by the standard, so results are reproducible bit-for-bit across
// platforms; the uniform conversion is done by hand for the same reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  double exponential() { return -std::log1p(-uniform()); }

  // Gamma(n, 1) as a sum of n unit exponentials (integer shape only).
  double gamma_int(int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += exponential();
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mimojam

#endif
