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

#include "shadowgraph/multigraph.h"

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "shadowgraph/errors.h"
#include "shadowgraph/predicate.h"
#include "shadowgraph/random.h"

namespace shadowgraph {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Multigraph RandomGraph(Vertex n, int edges, RandomStream& rng) {
  Pairs pairs;
  for (int i = 0; i < edges; ++i) {
    const Vertex u = 1 + static_cast<Vertex>(rng.UniformBelow(n));
    Vertex v = 1 + static_cast<Vertex>(rng.UniformBelow(n - 1));
    if (v >= u) ++v;
    pairs.emplace_back(u, v);
  }
  return Multigraph::FromPairs(n, pairs);
}

// Dense adjacency-matrix references.
std::vector<std::vector<int>> Adjacency(const Multigraph& g) {
  std::vector<std::vector<int>> a(g.n() + 1, std::vector<int>(g.n() + 1, 0));
  for (const auto& e : g.pairs()) {
    a[e.u][e.v] += e.mult;
    a[e.v][e.u] += e.mult;
  }
  return a;
}

std::uint64_t ReferenceTriangles(const Multigraph& g) {
  const auto a = Adjacency(g);
  std::uint64_t t = 0;
  for (Vertex x = 1; x <= g.n(); ++x)
    for (Vertex y = x + 1; y <= g.n(); ++y)
      for (Vertex z = y + 1; z <= g.n(); ++z)
        t += a[x][y] && a[x][z] && a[y][z];
  return t;
}

bool ReferenceConnected(const Multigraph& g) {
  if (g.n() <= 1) return true;
  const auto a = Adjacency(g);
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<Vertex> stack = {1};
  seen[1] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y = 1; y <= g.n(); ++y) {
      if (a[x][y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  for (Vertex v = 1; v <= g.n(); ++v)
    if (!seen[v]) return false;
  return true;
}

TEST(MultigraphTest, FromPairsMergesMultiplicity) {
  const Multigraph g = Multigraph::FromPairs(4, {{2, 1}, {1, 2}, {3, 4}});
  ASSERT_EQ(g.pairs().size(), 2u);
  EXPECT_EQ(g.pairs()[0], (PairMultiplicity{1, 2, 2}));
  EXPECT_EQ(g.multiplicity(2, 1), 2u);
  EXPECT_EQ(g.multiplicity(1, 3), 0u);
  EXPECT_EQ(g.total_edges(), 3u);
  EXPECT_FALSE(IsSimple(g));
  EXPECT_EQ(Degree(g, 1), 2u);
  EXPECT_EQ(Degree(g, 4), 1u);
  EXPECT_THROW(Degree(g, 5), InvalidParameter);
  EXPECT_THROW(Multigraph::FromPairs(4, {{2, 2}}), InvalidParameter);
  EXPECT_THROW(Multigraph::FromPairs(4, {{1, 5}}), InvalidParameter);
}

TEST(MultigraphTest, EmptyAndTinyGraphs) {
  EXPECT_TRUE(IsConnected(Multigraph(1)));
  EXPECT_TRUE(IsConnected(Multigraph(0)));
  EXPECT_FALSE(IsConnected(Multigraph(2)));
  EXPECT_EQ(CountIsolated(Multigraph(5)), 5u);
  EXPECT_TRUE(IsSimple(Multigraph(5)));
  EXPECT_EQ(CountTriangles(Multigraph(5)), 0u);
}

TEST(MultigraphTest, PropertiesMatchDenseReferences) {
  RandomStream rng(17);
  for (int rep = 0; rep < 300; ++rep) {
    const Vertex n = 2 + static_cast<Vertex>(rng.UniformBelow(9));
    const Multigraph g = RandomGraph(n, static_cast<int>(rng.UniformBelow(20)), rng);
    const auto a = Adjacency(g);
    std::size_t isolated = 0;
    bool simple = true;
    for (Vertex x = 1; x <= n; ++x) {
      int deg = 0;
      for (Vertex y = 1; y <= n; ++y) {
        deg += a[x][y];
        simple &= a[x][y] <= 1;
      }
      isolated += deg == 0;
      EXPECT_EQ(Degree(g, x), static_cast<std::uint64_t>(deg));
    }
    EXPECT_EQ(CountIsolated(g), isolated);
    EXPECT_EQ(IsSimple(g), simple);
    EXPECT_EQ(CountTriangles(g), ReferenceTriangles(g));
    EXPECT_EQ(IsConnected(g), ReferenceConnected(g));
  }
}

TEST(MultigraphTest, Subgraph) {
  const Multigraph small = Multigraph::FromPairs(4, {{1, 2}, {2, 3}});
  const Multigraph big = Multigraph::FromPairs(4, {{1, 2}, {2, 3}, {1, 2}});
  EXPECT_TRUE(IsSubgraph(small, big));
  EXPECT_FALSE(IsSubgraph(big, small));
  EXPECT_TRUE(IsSubgraph(Multigraph(4), small));
  EXPECT_THROW(IsSubgraph(Multigraph(3), small), InvalidParameter);
}

TEST(MultigraphTest, TextRoundTrip) {
  const Multigraph g = Multigraph::FromPairs(5, {{4, 2}, {1, 3}, {2, 4}});
  std::stringstream buffer;
  WriteMultigraph(buffer, g);
  EXPECT_EQ(buffer.str(), "n=5\n1 3 1\n2 4 2\n");
  EXPECT_EQ(ReadMultigraph(buffer), g);
  std::istringstream bad("n=5\n1 3\n");
  EXPECT_THROW(ReadMultigraph(bad), InvalidParameter);
}

TEST(PredicateTest, ParseAndName) {
  for (const char* name : {"simple", "connected", "no-isolated", "has-edge",
                           "triangle-count", "pair-adjacent(1,2)"}) {
    EXPECT_EQ(PropertyPredicate::Parse(name).Name(), name);
  }
  const auto pair = PropertyPredicate::Parse("pair-adjacent(4, 2)");
  EXPECT_EQ(pair.i(), 2u);
  EXPECT_EQ(pair.j(), 4u);
  EXPECT_THROW(PropertyPredicate::Parse("planar"), InvalidParameter);
  EXPECT_THROW(PropertyPredicate::Parse("pair-adjacent(2,2)"),
               InvalidParameter);
  EXPECT_THROW(PropertyPredicate::Parse("pair-adjacent(2)"), InvalidParameter);
}

TEST(PredicateTest, Evaluation) {
  const Multigraph triangle = Multigraph::FromPairs(4, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_TRUE(PropertyPredicate::HasTriangle()(triangle));
  EXPECT_FALSE(PropertyPredicate::Connected()(triangle));
  EXPECT_FALSE(PropertyPredicate::NoIsolated()(triangle));
  EXPECT_TRUE(PropertyPredicate::Simple()(triangle));
  EXPECT_TRUE(PropertyPredicate::HasEdge()(triangle));
  EXPECT_TRUE(PropertyPredicate::PairAdjacent(3, 1)(triangle));
  EXPECT_FALSE(PropertyPredicate::PairAdjacent(1, 4)(triangle));
  EXPECT_EQ(PropertyPredicate::HasTriangle().Statistic(triangle), 1u);
  EXPECT_EQ(PropertyPredicate::NoIsolated().Statistic(triangle), 1u);
  EXPECT_EQ(PropertyPredicate::Connected().Statistic(triangle), 3u);

  const auto custom = PropertyPredicate::Custom(
      "even", [](const Multigraph& g) { return g.total_edges() % 2 == 0; });
  EXPECT_FALSE(custom(triangle));
  EXPECT_EQ(custom.Name(), "even");
  EXPECT_FALSE(custom.IsMonotoneIncreasing());
  EXPECT_FALSE(PropertyPredicate::Simple().IsMonotoneIncreasing());
  EXPECT_TRUE(PropertyPredicate::Connected().IsMonotoneIncreasing());
}

}  // namespace
}  // namespace shadowgraph
