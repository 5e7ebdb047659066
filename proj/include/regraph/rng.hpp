#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace regraph {

// All sampling goes through mt19937_64 and the hand-written helpers below,
// never the std distributions.
using Rng = std::mt19937_64;

// Stream for replica `index` of a run seeded with `seed`. Streams are keyed
// by (seed, index) only, never by worker identity.
inline Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on {0, ..., bound-1}; Lemire's multiply-and-reject.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline double exponential(Rng& rng, double rate) {
  return -std::log1p(-uniform01(rng)) / rate;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Poisson by inversion, splitting large means into chunks of at most 16 so
// that exp(-mean) never underflows.
inline std::int64_t poisson(Rng& rng, double mean) {
  std::int64_t total = 0;
  while (mean > 0.0) {
    const double chunk = mean > 16.0 ? 16.0 : mean;
    mean -= chunk;
    double p = std::exp(-chunk);
    double cdf = p;
    const double u = uniform01(rng);
    std::int64_t k = 0;
    while (u >= cdf && k < 1000) {
      ++k;
      p *= chunk / static_cast<double>(k);
      cdf += p;
    }
    total += k;
  }
  return total;
}

}  // namespace regraph
