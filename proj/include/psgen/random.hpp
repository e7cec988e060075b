// Deterministic per-sample random streams.
//
// Every Monte-Carlo sample owns substreams derived from
// (master_seed, sample_index, tag). Generators draw different logical
// components (e.g. the DFT body and its subharmonic correction) from
// streams with distinct tags, so adding one component never perturbs the
// draws of another. Uniform and normal variates are produced by fixed
// arithmetic on the raw engine output, not by std:: distributions, so a
// given seed reproduces the same screens on any conforming platform.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "psgen/types.hpp"

namespace psgen {

/// Identifies a sample's random substream family.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t sample_index = 0;
};

enum class StreamTag : std::uint64_t {
  kDft = 1,
  kSubharmonic = 2,
  kPwd = 3,
  kPwdSubharmonic = 4,
  kSparse = 5,
  kSingleComponent = 6,
  kWhiteNoise = 7,
};

namespace detail {
// splitmix64 finalizer; full-period bijective mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

class RandomStream {
 public:
  RandomStream(StreamKey key, StreamTag tag)
      : engine_(detail::mix64(detail::mix64(detail::mix64(key.master_seed) ^ key.sample_index) ^
                              static_cast<std::uint64_t>(tag))) {}

  /// U[0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// U(lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Two i.i.d. N(0,1) variates (Box-Muller; one call per complex amplitude).
  std::array<double, 2> normal_pair() {
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps log() finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return {radius * std::cos(kTwoPi * u2), radius * std::sin(kTwoPi * u2)};
  }

  Complex circular_normal() {
    const auto [a, b] = normal_pair();
    return {a, b};
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline RandomStream make_stream(StreamKey key, StreamTag tag) { return RandomStream(key, tag); }

}  // namespace psgen
