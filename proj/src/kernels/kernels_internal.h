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

#ifndef SHADOWGRAPH_KERNELS_KERNELS_INTERNAL_H_
#define SHADOWGRAPH_KERNELS_KERNELS_INTERNAL_H_

#include <cstdint>
#include <span>

namespace shadowgraph::kernels {

struct KernelTable {
  void (*bernoulli_convolve)(std::span<const double>, double,
                             std::span<double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*half_l1)(std::span<const double>, std::span<const double>);
  double (*all_groups_hit)(std::span<const std::uint64_t>,
                           std::span<const double>);
  void (*popcount_histogram)(std::uint64_t, std::span<const double>,
                             std::span<double>);
};

namespace scalar {
extern const KernelTable kTable;
}  // namespace scalar

#if defined(SHADOWGRAPH_BUILD_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}  // namespace avx2
#endif

}  // namespace shadowgraph::kernels

#endif  // SHADOWGRAPH_KERNELS_KERNELS_INTERNAL_H_
