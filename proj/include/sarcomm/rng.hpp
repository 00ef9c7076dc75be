// rng.hpp -- counter-based random streams for reproducible parallel synthesis.
//
// Every draw is a pure function of (seed, stream, counter), so results do not
// depend on thread count or evaluation order. Streams are keyed per pulse for
// receiver noise and per cell for clutter reflectivity.
#pragma once

#include <complex>
#include <cstdint>

namespace sarcomm {

// splitmix64 finalizer; good 64-bit avalanche for counter inputs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed) ^ (0x9E3779B97F4A7C15ull * (stream + 1)))) {}

  // Uniform in (0, 1), never exactly 0 or 1.
  double uniform(std::uint64_t counter) const {
    const std::uint64_t bits = mix64(key_ ^ (counter * 0xD1B54A32D192ED03ull));
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double normal(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Circular complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    const double r = std::sqrt(-std::log(u1));
    const double th = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(th), r * std::sin(th)};
  }

 private:
  std::uint64_t key_;
};

}  // namespace sarcomm
