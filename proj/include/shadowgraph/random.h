// Copyright 2026 The Shadowgraph Authors
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

#ifndef SHADOWGRAPH_RANDOM_H_
#define SHADOWGRAPH_RANDOM_H_

#include <array>
#include <cstdint>
#include <limits>

namespace shadowgraph {

// Deterministic 64-bit random stream (xoshiro256** seeded through
// SplitMix64). Every sampling routine in the library draws from an explicit
// stream so that results are a pure function of the stream state.
//
// Bounded integers and Bernoulli trials are implemented here rather than via
// <random> distributions, whose output sequences are implementation-defined;
// the library promises bit-identical output across standard libraries.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed = 0);

  // Stream for trial `trial` of sweep point `point` under master `seed`.
  // Counter-mode derivation: streams for distinct (point, trial) keys are
  // independent of each other and of the order in which they are created.
  static RandomStream ForTrial(std::uint64_t seed, std::uint64_t point,
                               std::uint64_t trial);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformUnit();

  // Consumes exactly one draw regardless of `p`.
  bool Bernoulli(double p) { return UniformUnit() < p; }

  // Number of failures before the next success of a Bernoulli(p) sequence.
  // Saturates at max() for p == 0. Consumes exactly one draw.
  std::uint64_t GeometricSkip(double p);

 private:
  std::array<std::uint64_t, 4> state_;
};

// SplitMix64 finalizer; exposed for key derivation elsewhere.
std::uint64_t Mix64(std::uint64_t x);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_RANDOM_H_
