#ifndef WFX_RNG_HPP
#define WFX_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace wfx {

// Seeded, stream-splittable generator. Every stochastic operation takes an
// explicit Rng; parallel workers use distinct stream ids on the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(mix(seed, stream)) {}

  std::mt19937_64& engine() { return engine_; }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double exponential(double rate) {
    return std::exponential_distribution<double>(rate)(engine_);
  }
  double gamma(double shape) {
    return std::gamma_distribution<double>(shape, 1.0)(engine_);
  }
  double beta(double alpha, double beta_par) {
    double g1 = gamma(alpha), g2 = gamma(beta_par);
    double denom = g1 + g2;
    if (denom <= 0.0) return 0.5;
    return g1 / denom;
  }
  long binomial(long n, double p) {
    if (n <= 0) return 0;
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n;
    return std::binomial_distribution<long>(n, p)(engine_);
  }
  // Draw an index from an (unnormalized) discrete distribution.
  int categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    double acc = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u <= acc) return int(i);
    }
    return int(weights.size()) - 1;
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // SplitMix64 over seed xor a stream tweak.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace wfx

#endif  // WFX_RNG_HPP
