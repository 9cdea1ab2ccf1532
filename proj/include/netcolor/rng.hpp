#pragma once

#include <cstdint>
#include <random>

namespace netcolor {

// Seeded random source used throughout the library.
//
// The engine is std::mt19937_64, whose algorithm and single-value seeding
// are fully specified by the C++ standard, so streams are reproducible
// across platforms and standard libraries. The standard *distributions*
// are not specified, which is why bounded integers and unit-interval
// doubles are drawn with the helpers below instead of <random>
// distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n); n must be nonzero. Multiply-with-rejection
  // (Lemire), unbiased.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Mixes a salt into a seed (splitmix64-style finalizer). Used to derive
// independent child streams from one base seed; pure function of its inputs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace netcolor
