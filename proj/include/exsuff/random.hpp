#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace exsuff {

/// Seeded random stream.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// derives every variate from raw 64-bit words so results are identical across
/// standard library implementations. One stream per thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal variate (Marsaglia polar method).
  double standard_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// Seed for the index-th independent sub-stream of a master seed (splitmix64
/// finalizer over both inputs).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace exsuff
