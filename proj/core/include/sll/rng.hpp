#ifndef SLL_RNG_HPP
#define SLL_RNG_HPP

#include <cstdint>

namespace sll {

/// Deterministic 64-bit linear congruential generator (Knuth's MMIX
/// multiplier/increment). Schedules and synthetic instances are generated
/// from this so results reproduce bit-for-bit across platforms and can be
/// re-derived in other languages from the constants alone:
///
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///
/// Derived draws documented per method; only the high 32 bits of the state
/// are used for bounded integers (low LCG bits are weak).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform integer in [0, bound); bound must be >= 1.
  /// Computed as (next_u64() >> 32) % bound.
  std::uint64_t next_index(std::uint64_t bound) {
    return (next_u64() >> 32) % bound;
  }

  /// Uniform double in [0, 1) from the high 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Box-Muller transform (two uniforms per pair,
  /// second value cached).
  double next_gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sll

#endif  // SLL_RNG_HPP
