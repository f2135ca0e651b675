#pragma once

// Deterministic randomness. Every algorithm in the library draws through Rng
// so that a (dataset, params, seed) triple reproduces bit-for-bit on any
// platform and at any thread count.
//
// Engine: std::mt19937_64, whose output sequence is pinned by the standard.
// Seeds are scrambled through SplitMix64 first so nearby user seeds (0, 1, 2)
// start unrelated streams. Bounded draws use rejection sampling instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "kco/common.hpp"

namespace kco {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t x = (state += 0x9E3779B97F4A7C15ULL);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(SplitMix64(seed).next()) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). Rejection keeps the draw exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    KCO_REQUIRE(n > 0, "Rng::below: n must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;  // largest multiple of n <= 2^64-1
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via the polar method; avoids libm trig, whose last-bit
  // behaviour varies across implementations.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * unit() - 1.0;
      v = 2.0 * unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// m distinct indices from [0, n), returned in ascending order.
std::vector<PointId> sample_indices(Rng& rng, std::size_t n, std::size_t m);

// s draws without replacement from ids, each draw proportional to its weight.
// ids and w are consumed. Returned in draw order. With unit weights this is
// plain uniform sampling without replacement.
std::vector<PointId> sample_weighted(Rng& rng, std::vector<PointId> ids,
                                     std::vector<double> w, std::size_t s);

}  // namespace kco
