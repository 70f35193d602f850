// Copyright 2026 the winoconv authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WINOCONV_RNG_HPP_
#define WINOCONV_RNG_HPP_

#include <cstdint>

namespace winoconv {

// Counter-based SplitMix64 (Steele et al., SplittableRandom). The value at
// counter i of the stream for `seed` is
//
//   mix(seed + (i + 1) * 0x9E3779B97F4A7C15)
//
// with mix(z): z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27;
//              z *= 0x94D049BB133111EB; z ^= z>>31.
//
// Any stream position can be computed directly from (seed, i), so seeded
// tensor fills are bit-reproducible across platforms and re-implementations.
// Golden buffers in the test corpus pin this exact definition.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // Value at absolute position `index` of the stream for `seed`; equals the
  // (index+1)-th call to next() on a fresh SplitMix64(seed).
  static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + (index + 1) * kGamma);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform float in [lo, hi); the affine map is evaluated in double and
  // rounded once to float.
  float next_uniform(float lo, float hi) {
    const double u = next_double();
    return static_cast<float>(static_cast<double>(lo) +
                              u * (static_cast<double>(hi) - static_cast<double>(lo)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace winoconv

#endif  // WINOCONV_RNG_HPP_
