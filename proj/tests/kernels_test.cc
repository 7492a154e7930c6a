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

#include "shadowgraph/kernels.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <vector>

#include "shadowgraph/random.h"

namespace shadowgraph::kernels {
namespace {

class KernelEquivalenceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (DetectedSimdLevel() != SimdLevel::kAvx2) {
      GTEST_SKIP() << "no AVX2 on this machine";
    }
  }
  void TearDown() override { SetSimdLevel(DetectedSimdLevel()); }

  template <typename F>
  auto Both(F&& f) {
    SetSimdLevel(SimdLevel::kScalar);
    auto scalar = f();
    SetSimdLevel(SimdLevel::kAvx2);
    auto simd = f();
    return std::make_pair(scalar, simd);
  }

  std::vector<double> RandomVector(std::size_t size) {
    std::vector<double> v(size);
    for (double& x : v) x = rng_.UniformUnit();
    return v;
  }

  RandomStream rng_{2024};
};

TEST_F(KernelEquivalenceTest, BernoulliConvolve) {
  for (std::size_t size = 1; size < 40; ++size) {
    const auto in = RandomVector(size);
    const double prob = rng_.UniformUnit();
    const auto [a, b] = Both([&] {
      std::vector<double> out(size + 1);
      BernoulliConvolve(in, prob, out);
      return out;
    });
    for (std::size_t i = 0; i <= size; ++i) EXPECT_NEAR(a[i], b[i], 1e-15);
  }
}

TEST_F(KernelEquivalenceTest, AxpyDotAndDistance) {
  for (std::size_t size = 0; size < 40; ++size) {
    const auto x = RandomVector(size);
    const auto y = RandomVector(size);
    const auto [ya, yb] = Both([&] {
      std::vector<double> out = y;
      Axpy(0.37, x, out);
      return out;
    });
    for (std::size_t i = 0; i < size; ++i) EXPECT_NEAR(ya[i], yb[i], 1e-15);
    const auto [da, db] = Both([&] { return Dot(x, y); });
    EXPECT_NEAR(da, db, 1e-13);
    const auto [ha, hb] = Both([&] { return HalfL1Distance(x, y); });
    EXPECT_NEAR(ha, hb, 1e-13);
  }
}

TEST_F(KernelEquivalenceTest, AllGroupsHitWeight) {
  for (unsigned bits = 0; bits <= 12; ++bits) {
    const auto weights = RandomVector(std::size_t{1} << bits);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<std::uint64_t> groups(1 + rng_.UniformBelow(4));
      for (auto& g : groups) {
        g = bits ? rng_() & ((std::uint64_t{1} << bits) - 1) : 0;
      }
      const auto [a, b] = Both([&] { return AllGroupsHitWeight(groups, weights); });
      EXPECT_NEAR(a, b, 1e-14 * weights.size());
      double reference = 0.0;
      for (std::uint64_t mask = 0; mask < weights.size(); ++mask) {
        bool all = true;
        for (const auto g : groups) all &= (mask & g) != 0;
        if (all) reference += weights[mask];
      }
      EXPECT_NEAR(a, reference, 1e-14 * weights.size());
    }
  }
}

TEST_F(KernelEquivalenceTest, PopcountHistogram) {
  const auto weights = RandomVector(1024);
  const std::uint64_t group = 0b1011001101;
  const auto [a, b] = Both([&] {
    std::vector<double> hist(11, 0.0);
    PopcountHistogram(group, weights, hist);
    return hist;
  });
  std::vector<double> reference(11, 0.0);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    reference[std::popcount(mask & group)] += weights[mask];
  }
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_NEAR(a[i], b[i], 1e-12);
    EXPECT_NEAR(a[i], reference[i], 1e-12);
  }
}

TEST(KernelDispatchTest, LevelSelection) {
  EXPECT_TRUE(SetSimdLevel(SimdLevel::kScalar));
  EXPECT_EQ(ActiveSimdLevel(), SimdLevel::kScalar);
  EXPECT_EQ(SimdLevelName(SimdLevel::kScalar), "scalar");
  EXPECT_EQ(SimdLevelName(SimdLevel::kAvx2), "avx2");
  EXPECT_EQ(SetSimdLevel(SimdLevel::kAvx2),
            DetectedSimdLevel() == SimdLevel::kAvx2);
  SetSimdLevel(DetectedSimdLevel());
}

}  // namespace
}  // namespace shadowgraph::kernels
