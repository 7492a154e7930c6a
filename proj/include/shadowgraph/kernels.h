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

#ifndef SHADOWGRAPH_KERNELS_H_
#define SHADOWGRAPH_KERNELS_H_

#include <cstdint>
#include <span>
#include <string_view>

// Arithmetic inner loops shared by the analytics and oracle modules. Each
// kernel has a portable scalar reference and, on x86-64, an AVX2 variant
// chosen at runtime. The environment variable SHADOWGRAPH_SIMD=scalar forces
// the reference path.
namespace shadowgraph::kernels {

enum class SimdLevel { kScalar, kAvx2 };

std::string_view SimdLevelName(SimdLevel level);

// Best level supported by both the build and the running CPU.
SimdLevel DetectedSimdLevel();

SimdLevel ActiveSimdLevel();

// Switches dispatch; returns false (and changes nothing) when `level` is not
// supported here. Not thread-safe with respect to concurrent kernel calls.
bool SetSimdLevel(SimdLevel level);

// out[j] = in[j] * (1 - prob) + in[j - 1] * prob, with in[-1] = in[size] = 0.
// Requires out.size() == in.size() + 1 and no aliasing.
void BernoulliConvolve(std::span<const double> in, double prob,
                       std::span<double> out);

// y += alpha * x. Sizes must match.
void Axpy(double alpha, std::span<const double> x, std::span<double> y);

double Dot(std::span<const double> a, std::span<const double> b);

// Total-variation distance 0.5 * sum |a - b|. Sizes must match.
double HalfL1Distance(std::span<const double> a, std::span<const double> b);

// Sum over every bitmask `mask` in [0, weights.size()) of weights[mask],
// restricted to masks that intersect every entry of `groups`. weights.size()
// must be a power of two. An empty `groups` sums all weights.
double AllGroupsHitWeight(std::span<const std::uint64_t> groups,
                          std::span<const double> weights);

// hist[popcount(mask & group)] += weights[mask] for every mask in
// [0, weights.size()). hist must have at least popcount(group) + 1 entries.
void PopcountHistogram(std::uint64_t group, std::span<const double> weights,
                       std::span<double> hist);

}  // namespace shadowgraph::kernels

#endif  // SHADOWGRAPH_KERNELS_H_
