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

#include "shadowgraph/hypergraph.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/errors.h"

namespace shadowgraph {
namespace {

std::vector<std::vector<Vertex>> Edges(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  }
  return out;
}

TEST(HypergraphTest, FromEdgesSortsAndValidates) {
  const Hypergraph h = Hypergraph::FromEdges(5, {{3, 1, 2}, {5, 4}});
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(Edges(h), (std::vector<std::vector<Vertex>>{{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(h.edge_size(0), 3u);
  EXPECT_THROW(Hypergraph::FromEdges(5, {{1}}), InvalidParameter);
  EXPECT_THROW(Hypergraph::FromEdges(5, {{1, 1, 2}}), InvalidParameter);
  EXPECT_THROW(Hypergraph::FromEdges(5, {{0, 2}}), InvalidParameter);
  EXPECT_THROW(Hypergraph::FromEdges(5, {{2, 6}}), InvalidParameter);
  EXPECT_TRUE(Hypergraph(4).empty());
}

TEST(HypergraphTest, CompleteUniformIsLexicographic) {
  const Hypergraph h = CompleteUniform(6, 3);
  ASSERT_EQ(h.num_edges(), 20u);
  const auto edges = Edges(h);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    EXPECT_LT(edges[i - 1], edges[i]);
  }
  EXPECT_EQ(edges.front(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(edges.back(), (std::vector<Vertex>{4, 5, 6}));
  EXPECT_THROW(CompleteUniform(3, 4), InvalidParameter);
  EXPECT_THROW(CompleteUniform(3, 1), InvalidParameter);
}

TEST(HypergraphTest, BinomialHypergraphExtremesAndMean) {
  RandomStream rng(3);
  EXPECT_TRUE(BinomialHypergraph(7, 3, 0.0, rng).empty());
  EXPECT_EQ(BinomialHypergraph(7, 3, 1.0, rng), CompleteUniform(7, 3));
  const int reps = 4000;
  double total = 0.0;
  std::vector<int> hits(35, 0);
  for (int r = 0; r < reps; ++r) {
    const Hypergraph h = BinomialHypergraph(7, 3, 0.3, rng);
    total += static_cast<double>(h.num_edges());
    const auto edges = Edges(h);
    for (std::size_t i = 1; i < edges.size(); ++i) {
      ASSERT_LT(edges[i - 1], edges[i]);
    }
    for (const auto& e : edges) ++hits[RankColex(e)];
  }
  EXPECT_NEAR(total / reps, 0.3 * 35, 5 * std::sqrt(35 * 0.21 / reps));
  for (const int c : hits) EXPECT_NEAR(c / double(reps), 0.3, 0.04);
  EXPECT_THROW(BinomialHypergraph(7, 3, 1.5, rng), InvalidParameter);
}

TEST(HypergraphTest, UniformHypergraphDrawsDistinctSets) {
  RandomStream rng(4);
  EXPECT_EQ(UniformHypergraph(6, 3, 20, rng), CompleteUniform(6, 3));
  EXPECT_TRUE(UniformHypergraph(6, 3, 0, rng).empty());
  const int reps = 20000;
  std::vector<int> hits(20, 0);
  for (int r = 0; r < reps; ++r) {
    const Hypergraph h = UniformHypergraph(6, 3, 5, rng);
    ASSERT_EQ(h.num_edges(), 5u);
    std::set<std::vector<Vertex>> distinct;
    for (const auto& e : Edges(h)) {
      distinct.insert(e);
      ++hits[RankColex(e)];
    }
    ASSERT_EQ(distinct.size(), 5u);
  }
  for (const int c : hits) EXPECT_NEAR(c / double(reps), 0.25, 0.015);
  EXPECT_THROW(UniformHypergraph(6, 3, 21, rng), InvalidParameter);
}

TEST(HypergraphTest, MultiplicityAndDegree) {
  const Hypergraph h =
      Hypergraph::FromEdges(5, {{1, 2, 3}, {3, 2, 1}, {1, 2}, {2, 4, 5}});
  const std::vector<Vertex> t = {2, 3, 1};
  EXPECT_EQ(Multiplicity(h, t), 2u);
  const std::vector<Vertex> pair = {1, 2};
  EXPECT_EQ(Multiplicity(h, pair), 1u);
  EXPECT_EQ(Degree(h, pair), 3u);
  const std::vector<Vertex> v2 = {2};
  EXPECT_EQ(Degree(h, v2), 4u);
}

TEST(HypergraphTest, SubMultisetAndDifference) {
  const Hypergraph big =
      Hypergraph::FromEdges(5, {{1, 2, 3}, {1, 2, 3}, {2, 4}, {3, 5}});
  const Hypergraph small = Hypergraph::FromEdges(5, {{3, 2, 1}, {3, 5}});
  const Hypergraph too_many =
      Hypergraph::FromEdges(5, {{2, 4}, {2, 4}});
  EXPECT_TRUE(IsSubMultiset(small, big));
  EXPECT_FALSE(IsSubMultiset(too_many, big));
  EXPECT_FALSE(IsSubMultiset(big, small));
  const Hypergraph diff = MultisetDifference(big, small);
  EXPECT_EQ(Edges(diff),
            (std::vector<std::vector<Vertex>>{{1, 2, 3}, {2, 4}}));
  EXPECT_THROW(MultisetDifference(big, too_many), InvalidParameter);
}

TEST(HypergraphTest, TextRoundTrip) {
  const Hypergraph h = Hypergraph::FromEdges(6, {{1, 4, 6}, {2, 3}, {1, 4, 6}});
  std::stringstream buffer;
  WriteHypergraph(buffer, h);
  EXPECT_EQ(buffer.str(), "n=6\n1 4 6\n2 3\n1 4 6\n");
  EXPECT_EQ(ReadHypergraph(buffer), h);

  std::istringstream with_comments("# header\n\nn=4\n# edge\n4 1 2\n");
  EXPECT_EQ(ReadHypergraph(with_comments),
            Hypergraph::FromEdges(4, {{1, 2, 4}}));
}

TEST(HypergraphTest, ReadRejectsMalformedInput) {
  for (const char* text : {"1 2 3\n", "n=3\n1 4\n", "n=3\n1 x\n",
                           "n=3\n2\n", "n=3\n1 1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadHypergraph(in), InvalidParameter) << text;
  }
}

}  // namespace
}  // namespace shadowgraph
