#ifndef VWM_RNG_HPP_
#define VWM_RNG_HPP_

#include <cstdint>

namespace vwm {

// SplitMix64 (Steele, Lea, Flood 2014). Small, fully specified, and
// identical on every platform, which std::uniform_real_distribution is not.
//
// Streams are addressed by (seed, index): the starting state is
// mix(seed) ^ mix(index), so trial i of a Monte Carlo run draws the same
// numbers no matter which thread executes it.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + kGolden) ^ mix(index + kGolden));
  }

  constexpr std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace vwm

#endif  // VWM_RNG_HPP_
