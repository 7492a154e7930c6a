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

// AVX2 variants. This translation unit is compiled with -mavx2 -mfma and is
// only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "kernels/kernels_internal.h"

namespace shadowgraph::kernels::avx2 {

namespace {

double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

void BernoulliConvolve(std::span<const double> in, double prob,
                       std::span<double> out) {
  const double stay = 1.0 - prob;
  const std::size_t size = in.size();
  if (size == 0) {
    out[0] = 0.0;
    return;
  }
  out[0] = in[0] * stay;
  const __m256d vstay = _mm256_set1_pd(stay);
  const __m256d vprob = _mm256_set1_pd(prob);
  std::size_t j = 1;
  for (; j + 4 <= size; j += 4) {
    const __m256d cur = _mm256_loadu_pd(in.data() + j);
    const __m256d prev = _mm256_loadu_pd(in.data() + j - 1);
    _mm256_storeu_pd(out.data() + j,
                     _mm256_add_pd(_mm256_mul_pd(cur, vstay),
                                   _mm256_mul_pd(prev, vprob)));
  }
  for (; j < size; ++j) out[j] = in[j] * stay + in[j - 1] * prob;
  out[size] = in[size - 1] * prob;
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    const __m256d vy = _mm256_loadu_pd(y.data() + i);
    const __m256d vx = _mm256_loadu_pd(x.data() + i);
    _mm256_storeu_pd(y.data() + i, _mm256_fmadd_pd(va, vx, vy));
  }
  for (; i < x.size(); ++i) y[i] += alpha * x[i];
}

double Dot(std::span<const double> a, std::span<const double> b) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= a.size(); i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i),
                           _mm256_loadu_pd(b.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4),
                           _mm256_loadu_pd(b.data() + i + 4), acc1);
  }
  double sum = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double HalfL1(std::span<const double> a, std::span<const double> b) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= a.size(); i += 4) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i),
                                       _mm256_loadu_pd(b.data() + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, diff));
  }
  double sum = HorizontalSum(acc);
  for (; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return 0.5 * sum;
}

double AllGroupsHit(std::span<const std::uint64_t> groups,
                    std::span<const double> weights) {
  const std::size_t count = weights.size();
  if (count < 8) {
    double sum = 0.0;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      bool hit = true;
      for (const std::uint64_t g : groups) hit = hit && (mask & g) != 0;
      if (hit) sum += weights[mask];
    }
    return sum;
  }
  const __m256i zero = _mm256_setzero_si256();
  const __m256i step = _mm256_set1_epi64x(8);
  __m256i masks0 = _mm256_setr_epi64x(0, 1, 2, 3);
  __m256i masks1 = _mm256_setr_epi64x(4, 5, 6, 7);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  for (std::size_t base = 0; base < count; base += 8) {
    __m256i miss0 = zero;
    __m256i miss1 = zero;
    for (const std::uint64_t g : groups) {
      const __m256i vg = _mm256_set1_epi64x(static_cast<long long>(g));
      miss0 = _mm256_or_si256(
          miss0, _mm256_cmpeq_epi64(_mm256_and_si256(masks0, vg), zero));
      miss1 = _mm256_or_si256(
          miss1, _mm256_cmpeq_epi64(_mm256_and_si256(masks1, vg), zero));
    }
    const __m256d w0 = _mm256_loadu_pd(weights.data() + base);
    const __m256d w1 = _mm256_loadu_pd(weights.data() + base + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(_mm256_castsi256_pd(miss0), w0));
    acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(_mm256_castsi256_pd(miss1), w1));
    masks0 = _mm256_add_epi64(masks0, step);
    masks1 = _mm256_add_epi64(masks1, step);
  }
  return HorizontalSum(_mm256_add_pd(acc0, acc1));
}

}  // namespace

const KernelTable kTable = {
    &BernoulliConvolve, &Axpy, &Dot, &HalfL1, &AllGroupsHit,
    nullptr,  // no vector popcount in AVX2; dispatch falls back to scalar
};

}  // namespace shadowgraph::kernels::avx2
