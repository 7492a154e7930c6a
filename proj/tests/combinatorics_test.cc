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

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <vector>

namespace shadowgraph {
namespace {

TEST(ChooseTest, MatchesPascalTriangle) {
  std::vector<std::vector<std::uint64_t>> pascal(61);
  for (std::size_t n = 0; n <= 60; ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) {
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
  }
  for (std::size_t n = 0; n <= 60; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      ASSERT_EQ(Choose(n, k), pascal[n][k]) << n << " " << k;
    }
    EXPECT_EQ(Choose(n, n + 1), 0u);
  }
}

TEST(ChooseTest, OverflowThrows) {
  EXPECT_THROW(Choose(200, 100), std::overflow_error);
  EXPECT_NO_THROW(Choose(66, 33));
  EXPECT_NEAR(ChooseReal(200, 100) / 9.054851465610328e58, 1.0, 1e-10);
}

TEST(RankTest, ColexRoundTrip) {
  const Vertex n = 9;
  std::set<std::uint64_t> seen;
  std::vector<Vertex> subset = {1, 2, 3, 4};
  do {
    const std::uint64_t rank = RankColex(subset);
    ASSERT_LT(rank, Choose(n, 4));
    seen.insert(rank);
    std::vector<Vertex> back(4);
    UnrankColex(rank, back);
    EXPECT_EQ(back, subset);
  } while (NextCombination(subset, n));
  EXPECT_EQ(seen.size(), Choose(n, 4));
}

TEST(RankTest, LexUnrankFollowsNextCombination) {
  const Vertex n = 8;
  std::vector<Vertex> subset = {1, 2, 3};
  std::uint64_t rank = 0;
  do {
    std::vector<Vertex> out(3);
    UnrankLex(rank, n, out);
    EXPECT_EQ(out, subset) << "rank " << rank;
    ++rank;
  } while (NextCombination(subset, n));
  EXPECT_EQ(rank, Choose(n, 3));
}

TEST(RankTest, PairPositionsCoverEveryPair) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint64_t i = 0; i < Choose(7, 2); ++i) {
    const auto [a, b] = UnrankPairPositions(i);
    EXPECT_LT(a, b);
    EXPECT_LT(b, 7u);
    seen.insert({a, b});
  }
  EXPECT_EQ(seen.size(), 21u);
}

TEST(RankTest, NextCombinationSingleton) {
  std::vector<Vertex> s = {3};
  EXPECT_FALSE(NextCombination(s, 3));
}

}  // namespace
}  // namespace shadowgraph
