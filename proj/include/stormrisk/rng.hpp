#pragma once

#include <cstdint>
#include <random>

namespace stormrisk {

// splitmix64 finalizer; spreads user seeds and derives substream seeds
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded random stream. One stream per worker; never share across threads.
// Reproducibility contract: same seed + same build => same sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  // Independent stream derived from this stream's seed and a tag.
  // Stable no matter how much of the parent stream has been consumed.
  Rng substream(std::uint64_t tag) const {
    return Rng(splitmix64(seed_ ^ splitmix64(tag ^ 0xa02f0d57c7b1f1d3ULL)));
  }

  // uniform on the open interval (0,1); safe for inverse-CDF sampling
  double uniform() {
    double u;
    do {
      u = std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
    } while (u <= 0.0);
    return u;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal(double mu = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mu, sd)(gen_);
  }

  double gamma(double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0 / rate)(gen_);
  }

  double exponential(double rate = 1.0) {
    return std::exponential_distribution<double>(rate)(gen_);
  }

  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<long>(mean)(gen_);
  }

  long binomial(long n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    return std::binomial_distribution<long>(n, p)(gen_);
  }

  double beta(double a, double b) {
    const double x = gamma(a, 1.0);
    const double y = gamma(b, 1.0);
    return x / (x + y);
  }

  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace stormrisk
