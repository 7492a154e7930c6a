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

#include "shadowgraph/generator.h"

#include <string>
#include <unordered_set>
#include <utility>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/errors.h"

namespace shadowgraph {

namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0, 1]");
  }
}

std::uint64_t PairCount(std::size_t size) { return size * (size - 1) / 2; }

Doubleton DrawDoubleton(std::span<const Vertex> edge, RandomStream& rng) {
  return DoubletonAt(edge, rng.UniformBelow(PairCount(edge.size())));
}

// Adds the edges of every successful rank in [0, total) at rate `rate`,
// choosing a uniform doubleton of the unranked k-subset for each.
void AppendSparseSuccesses(unsigned k, std::uint64_t total,
                           double rate, RandomStream& rng,
                           std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Vertex> subset(k);
  std::uint64_t rank = rng.GeometricSkip(rate);
  while (rank < total) {
    UnrankColex(rank, subset);
    const Doubleton d = DrawDoubleton(subset, rng);
    pairs.emplace_back(d.u, d.v);
    const std::uint64_t skip = rng.GeometricSkip(rate);
    if (skip >= total - rank - 1) break;
    rank += 1 + skip;
  }
}

void CheckFamily(Vertex n, unsigned k) {
  if (k < 2 || k > n) throw InvalidParameter("need 2 <= k <= n");
}

}  // namespace

Doubleton DoubletonAt(std::span<const Vertex> edge, std::uint64_t index) {
  const auto [a, b] = UnrankPairPositions(index);
  return {edge[a], edge[b]};
}

ShadowSelection SampleShadow(const Hypergraph& h, RandomStream& rng) {
  ShadowSelection shadow;
  shadow.n = h.n();
  shadow.doubletons.reserve(h.num_edges());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    shadow.doubletons.push_back(DrawDoubleton(h.edge(i), rng));
  }
  return shadow;
}

Multigraph Realize(const ShadowSelection& shadow, double p,
                   RandomStream& rng) {
  CheckProbability(p, "p");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Doubleton& d : shadow.doubletons) {
    if (rng.Bernoulli(p)) pairs.emplace_back(d.u, d.v);
  }
  return Multigraph::FromPairs(shadow.n, std::move(pairs));
}

Multigraph Generate(const Hypergraph& h, double p, RandomStream& rng) {
  CheckProbability(p, "p");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Doubleton d = DrawDoubleton(h.edge(i), rng);
    if (rng.Bernoulli(p)) pairs.emplace_back(d.u, d.v);
  }
  return Multigraph::FromPairs(h.n(), std::move(pairs));
}

CoupledGraphs CoupledGenerate(const Hypergraph& h, double p1, double p2,
                              RandomStream& rng) {
  CheckProbability(p1, "p1");
  CheckProbability(p2, "p2");
  if (p1 > p2) throw InvalidParameter("coupling needs p1 <= p2");
  const double upgrade = p1 < 1.0 ? (p2 - p1) / (1.0 - p1) : 0.0;
  std::vector<std::pair<Vertex, Vertex>> lower;
  std::vector<std::pair<Vertex, Vertex>> upper;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Doubleton d = DrawDoubleton(h.edge(i), rng);
    if (rng.Bernoulli(p1)) {
      lower.emplace_back(d.u, d.v);
      upper.emplace_back(d.u, d.v);
    } else if (rng.Bernoulli(upgrade)) {  // bad doubleton, second chance
      upper.emplace_back(d.u, d.v);
    }
  }
  return {Multigraph::FromPairs(h.n(), std::move(lower)),
          Multigraph::FromPairs(h.n(), std::move(upper))};
}

CoupledGraphs CoupledGenerateNested(const Hypergraph& h1,
                                    const Hypergraph& h2, double p,
                                    RandomStream& rng) {
  CheckProbability(p, "p");
  if (h1.n() != h2.n()) throw InvalidParameter("vertex counts differ");
  if (!IsSubMultiset(h1, h2)) {
    throw InvalidParameter("h1 is not a sub-multiset of h2");
  }
  const Hypergraph extra = MultisetDifference(h2, h1);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < h1.num_edges(); ++i) {
    const Doubleton d = DrawDoubleton(h1.edge(i), rng);
    if (rng.Bernoulli(p)) pairs.emplace_back(d.u, d.v);
  }
  Multigraph lower = Multigraph::FromPairs(h1.n(), pairs);
  for (std::size_t i = 0; i < extra.num_edges(); ++i) {
    const Doubleton d = DrawDoubleton(extra.edge(i), rng);
    if (rng.Bernoulli(p)) pairs.emplace_back(d.u, d.v);
  }
  return {std::move(lower), Multigraph::FromPairs(h2.n(), std::move(pairs))};
}

Multigraph SampleComplete(Vertex n, unsigned k, double p, RandomStream& rng) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  AppendSparseSuccesses(k, Choose(n, k), p, rng, pairs);
  return Multigraph::FromPairs(n, std::move(pairs));
}

Multigraph SampleBinomialModel(Vertex n, unsigned k, double p, double q,
                               RandomStream& rng) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  // A k-subset contributes an edge iff it is present and its coin succeeds.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  AppendSparseSuccesses(k, Choose(n, k), p * q, rng, pairs);
  return Multigraph::FromPairs(n, std::move(pairs));
}

Multigraph SampleUniformModel(Vertex n, unsigned k, std::uint64_t m, double p,
                              RandomStream& rng) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  const std::uint64_t total = Choose(n, k);
  if (m > total) throw InvalidParameter("m exceeds C(n,k)");
  // The successful hyperedges form a uniform subset of the m chosen ones
  // whose size is Bin(m, p); marginally a uniform subset of all k-subsets.
  std::uint64_t successes = 0;
  if (m > 0) {
    std::uint64_t index = rng.GeometricSkip(p);
    while (index < m) {
      ++successes;
      const std::uint64_t skip = rng.GeometricSkip(p);
      if (skip >= m - index - 1) break;
      index += 1 + skip;
    }
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(successes);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(successes);
  std::vector<Vertex> subset(k);
  for (std::uint64_t j = total - successes; j < total; ++j) {
    std::uint64_t pick = rng.UniformBelow(j + 1);
    if (!chosen.insert(pick).second) {
      pick = j;
      chosen.insert(j);
    }
    UnrankColex(pick, subset);
    const Doubleton d = DrawDoubleton(subset, rng);
    pairs.emplace_back(d.u, d.v);
  }
  return Multigraph::FromPairs(n, std::move(pairs));
}

}  // namespace shadowgraph
