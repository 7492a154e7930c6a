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

#include "shadowgraph/random.h"

#include <bit>
#include <cmath>

namespace shadowgraph {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t Mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) {
    s += kGolden;
    word = Mix64(s);
  }
}

RandomStream RandomStream::ForTrial(std::uint64_t seed, std::uint64_t point,
                                    std::uint64_t trial) {
  std::uint64_t key = Mix64(seed + kGolden);
  key = Mix64(key ^ (point * kGolden + 0x632be59bd9b4e019ULL));
  key = Mix64(key ^ (trial * 0xd1b54a32d192ed03ULL + kGolden));
  return RandomStream(key);
}

RandomStream::result_type RandomStream::operator()() {
  const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

std::uint64_t RandomStream::UniformBelow(std::uint64_t bound) {
  // Lemire's multiply-and-reject.
  unsigned __int128 product =
      static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double RandomStream::UniformUnit() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::GeometricSkip(double p) {
  const double u = UniformUnit();
  if (p >= 1.0) return 0;
  if (p <= 0.0) return max();
  const double skip = std::floor(std::log1p(-u) / std::log1p(-p));
  if (!(skip < 1.8e19)) return max();
  return static_cast<std::uint64_t>(skip);
}

}  // namespace shadowgraph
