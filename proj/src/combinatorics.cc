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

#include "shadowgraph/combinatorics.h"

#include <cmath>
#include <stdexcept>

namespace shadowgraph {

std::uint64_t Choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) throw std::overflow_error("Choose overflow");
  }
  return static_cast<std::uint64_t>(result);
}

double ChooseReal(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (k < 64) {
    double result = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i) {
      result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return result;
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::exp(std::lgamma(nd + 1) - std::lgamma(kd + 1) -
                  std::lgamma(nd - kd + 1));
}

std::uint64_t RankColex(std::span<const Vertex> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += Choose(subset[i] - 1, i + 1);
  }
  return rank;
}

void UnrankColex(std::uint64_t rank, std::span<Vertex> out) {
  // Greedy from the largest element: c_i - 1 is the largest c with
  // C(c, i) <= remaining rank.
  for (std::size_t i = out.size(); i > 0; --i) {
    std::uint64_t lo = i - 1;  // C(i-1, i) = 0 <= rank always
    std::uint64_t hi = lo + 1;
    while (Choose(hi, i) <= rank) hi *= 2;
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (Choose(mid, i) <= rank) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    rank -= Choose(lo, i);
    out[i - 1] = static_cast<Vertex>(lo + 1);
  }
}

void UnrankLex(std::uint64_t rank, Vertex n, std::span<Vertex> out) {
  // Reflection c -> n + 1 - c turns lexicographic order into reversed colex
  // order.
  const std::size_t k = out.size();
  UnrankColex(Choose(n, k) - 1 - rank, out);
  for (std::size_t i = 0; i < k / 2; ++i) std::swap(out[i], out[k - 1 - i]);
  for (auto& c : out) c = n + 1 - c;
}

std::pair<std::uint32_t, std::uint32_t> UnrankPairPositions(
    std::uint64_t index) {
  // Colex over 2-subsets of positions: b is the largest with C(b, 2) <= index.
  auto b = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (b * (b - 1) / 2 > index) --b;
  while ((b + 1) * b / 2 <= index) ++b;
  const std::uint64_t a = index - b * (b - 1) / 2;
  return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

bool NextCombination(std::span<Vertex> subset, Vertex n) {
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < n - (k - 1 - i)) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace shadowgraph
