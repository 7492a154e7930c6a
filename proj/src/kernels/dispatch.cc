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

#include <cstdlib>
#include <string_view>

#include "kernels/kernels_internal.h"
#include "shadowgraph/kernels.h"

namespace shadowgraph::kernels {

namespace {

bool CpuHasAvx2() {
#if defined(SHADOWGRAPH_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

KernelTable Merge(const KernelTable& preferred) {
  KernelTable table = scalar::kTable;
  if (preferred.bernoulli_convolve)
    table.bernoulli_convolve = preferred.bernoulli_convolve;
  if (preferred.axpy) table.axpy = preferred.axpy;
  if (preferred.dot) table.dot = preferred.dot;
  if (preferred.half_l1) table.half_l1 = preferred.half_l1;
  if (preferred.all_groups_hit) table.all_groups_hit = preferred.all_groups_hit;
  if (preferred.popcount_histogram)
    table.popcount_histogram = preferred.popcount_histogram;
  return table;
}

KernelTable TableFor(SimdLevel level) {
#if defined(SHADOWGRAPH_BUILD_AVX2)
  if (level == SimdLevel::kAvx2) return Merge(avx2::kTable);
#endif
  (void)level;
  return scalar::kTable;
}

SimdLevel InitialLevel() {
  SimdLevel level = DetectedSimdLevel();
  if (const char* env = std::getenv("SHADOWGRAPH_SIMD")) {
    if (std::string_view(env) == "scalar") level = SimdLevel::kScalar;
  }
  return level;
}

struct Dispatch {
  SimdLevel level;
  KernelTable table;
};

Dispatch& State() {
  static Dispatch state = [] {
    const SimdLevel level = InitialLevel();
    return Dispatch{level, TableFor(level)};
  }();
  return state;
}

}  // namespace

std::string_view SimdLevelName(SimdLevel level) {
  switch (level) {
    case SimdLevel::kScalar:
      return "scalar";
    case SimdLevel::kAvx2:
      return "avx2";
  }
  return "unknown";
}

SimdLevel DetectedSimdLevel() {
  static const SimdLevel detected =
      CpuHasAvx2() ? SimdLevel::kAvx2 : SimdLevel::kScalar;
  return detected;
}

SimdLevel ActiveSimdLevel() { return State().level; }

bool SetSimdLevel(SimdLevel level) {
  if (level == SimdLevel::kAvx2 && DetectedSimdLevel() != SimdLevel::kAvx2) {
    return false;
  }
  State() = Dispatch{level, TableFor(level)};
  return true;
}

void BernoulliConvolve(std::span<const double> in, double prob,
                       std::span<double> out) {
  State().table.bernoulli_convolve(in, prob, out);
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  State().table.axpy(alpha, x, y);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  return State().table.dot(a, b);
}

double HalfL1Distance(std::span<const double> a, std::span<const double> b) {
  return State().table.half_l1(a, b);
}

double AllGroupsHitWeight(std::span<const std::uint64_t> groups,
                          std::span<const double> weights) {
  return State().table.all_groups_hit(groups, weights);
}

void PopcountHistogram(std::uint64_t group, std::span<const double> weights,
                       std::span<double> hist) {
  State().table.popcount_histogram(group, weights, hist);
}

}  // namespace shadowgraph::kernels
