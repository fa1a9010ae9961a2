#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rconmf {

/// SplitMix64 step, used to derive decorrelated stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic random stream. The engine is std::mt19937_64 (bit-exact across
/// platforms by the standard); all variate transforms are implemented here so
/// outputs do not depend on the standard library's distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Derive a decorrelated substream of `seed` identified by `stream`.
  static Rng stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 1)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1], safe as a log() argument.
  double uniform_positive() { return 1.0 - uniform(); }

  /// Standard normal via Box-Muller; generates pairs, caches the second value.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_positive();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  double exponential() { return -std::log(uniform_positive()); }

  /// Unbiased uniform integer in [0, n), by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace rconmf
