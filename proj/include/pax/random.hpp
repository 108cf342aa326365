#pragma once

#include <cstdint>
#include <random>

namespace pax {

// Seeded random stream with a fixed, platform-independent draw count.
//
// std::normal_distribution caches its second variate and its algorithm is
// implementation-defined, which breaks both the per-step draw count and
// cross-toolchain reproducibility. Every variate here is built from raw
// 64-bit engine outputs instead: uniform() consumes one, normal() two.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Standard normal via Box-Muller (cosine branch only).
  double normal();

  // Number of engine outputs consumed so far.
  std::uint64_t draws() const { return draws_; }

  friend bool operator==(const RandomStream&, const RandomStream&) = default;

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace pax
