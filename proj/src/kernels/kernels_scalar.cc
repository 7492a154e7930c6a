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

// Portable reference kernels. Every SIMD variant must agree with these.

#include <bit>
#include <cmath>

#include "kernels/kernels_internal.h"

namespace shadowgraph::kernels::scalar {

namespace {

void BernoulliConvolve(std::span<const double> in, double prob,
                       std::span<double> out) {
  const double stay = 1.0 - prob;
  const std::size_t size = in.size();
  if (size == 0) {
    out[0] = 0.0;
    return;
  }
  out[0] = in[0] * stay;
  for (std::size_t j = 1; j < size; ++j) {
    out[j] = in[j] * stay + in[j - 1] * prob;
  }
  out[size] = in[size - 1] * prob;
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double HalfL1(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return 0.5 * sum;
}

double AllGroupsHit(std::span<const std::uint64_t> groups,
                    std::span<const double> weights) {
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < weights.size(); ++mask) {
    bool hit = true;
    for (const std::uint64_t g : groups) {
      if ((mask & g) == 0) {
        hit = false;
        break;
      }
    }
    if (hit) sum += weights[mask];
  }
  return sum;
}

void PopcountHistogram(std::uint64_t group, std::span<const double> weights,
                       std::span<double> hist) {
  for (std::uint64_t mask = 0; mask < weights.size(); ++mask) {
    hist[std::popcount(mask & group)] += weights[mask];
  }
}

}  // namespace

const KernelTable kTable = {
    &BernoulliConvolve, &Axpy,         &Dot,
    &HalfL1,            &AllGroupsHit, &PopcountHistogram,
};

}  // namespace shadowgraph::kernels::scalar
