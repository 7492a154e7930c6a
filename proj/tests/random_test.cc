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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace shadowgraph {
namespace {

TEST(RandomStreamTest, TrialStreamsAreReproducibleAndDistinct) {
  RandomStream a = RandomStream::ForTrial(7, 3, 11);
  RandomStream b = RandomStream::ForTrial(7, 3, 11);
  RandomStream c = RandomStream::ForTrial(7, 3, 12);
  RandomStream d = RandomStream::ForTrial(7, 4, 11);
  RandomStream e = RandomStream::ForTrial(8, 3, 11);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
    EXPECT_NE(x, e());
  }
}

TEST(RandomStreamTest, UniformBelowIsUniform) {
  RandomStream rng(42);
  const std::uint64_t bound = 7;
  const int draws = 700000;
  std::vector<int> counts(bound, 0);
  for (int i = 0; i < draws; ++i) {
    const auto x = rng.UniformBelow(bound);
    ASSERT_LT(x, bound);
    ++counts[x];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(draws) / bound;
  for (const int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 22.46);  // 0.999 quantile, 6 degrees of freedom
}

TEST(RandomStreamTest, UnitIntervalAndBernoulliEdges) {
  RandomStream rng(1);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.UniformUnit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    EXPECT_FALSE(rng.Bernoulli(0.0));
    EXPECT_TRUE(rng.Bernoulli(1.0));
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(RandomStreamTest, BernoulliConsumesOneDraw) {
  RandomStream a(5);
  RandomStream b(5);
  a.Bernoulli(0.3);
  b();
  EXPECT_EQ(a(), b());
}

TEST(RandomStreamTest, GeometricSkipMean) {
  RandomStream rng(9);
  for (const double p : {0.05, 0.3, 0.9}) {
    double sum = 0.0;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) sum += static_cast<double>(rng.GeometricSkip(p));
    const double mean = (1.0 - p) / p;
    const double sd = std::sqrt((1.0 - p) / (p * p) / draws);
    EXPECT_NEAR(sum / draws, mean, 5 * sd) << p;
  }
  EXPECT_EQ(rng.GeometricSkip(1.0), 0u);
  EXPECT_EQ(rng.GeometricSkip(0.0), RandomStream::max());
}

}  // namespace
}  // namespace shadowgraph
