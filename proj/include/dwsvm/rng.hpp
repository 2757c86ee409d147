#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dwsvm {

/// splitmix64 mixing step; the basis of stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent substream seed from a master seed and up to three
/// stream keys (e.g. replication, class, purpose). Replications seeded this
/// way are order-insensitive: each cell's stream depends only on its keys.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(master ^ 0x6a09e667f3bcc908ULL);
  s = splitmix64(s ^ splitmix64(a ^ 0xbb67ae8584caa73bULL));
  s = splitmix64(s ^ splitmix64(b ^ 0x3c6ef372fe94f82bULL));
  s = splitmix64(s ^ splitmix64(c ^ 0xa54ff53a5f1d36f1ULL));
  return s;
}

/// Seeded random stream: std::mt19937_64 (bit-exact per the standard) with
/// explicit uniform and Box-Muller normal transforms, so draws are fully
/// specified by the seed and this file rather than by the standard library's
/// unspecified distribution internals.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via the basic Box-Muller transform; draws come in
  /// pairs and the second is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // unbiased via rejection on the top multiple of n
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace dwsvm
