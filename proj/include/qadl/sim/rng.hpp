// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADL_SIM_RNG_HPP_
#define QADL_SIM_RNG_HPP_

#include <cstdint>
#include <random>

namespace qadl::sim {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Deterministic uniform stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; reals are formed from the top 53
/// bits of each draw, so results agree across platforms and compilers.
///
/// A shot's stream is seeded with splitmix64(seed ^ splitmix64(shot)), which
/// makes every shot independent of the order in which shots are executed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static RngStream for_shot(std::uint64_t seed, std::uint64_t shot) {
    return RngStream(splitmix64(seed ^ splitmix64(shot)));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qadl::sim

#endif  // QADL_SIM_RNG_HPP_
