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

#ifndef SHADOWGRAPH_GENERATOR_H_
#define SHADOWGRAPH_GENERATOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "shadowgraph/hypergraph.h"
#include "shadowgraph/multigraph.h"
#include "shadowgraph/random.h"

namespace shadowgraph {

// An unordered pair u < v.
struct Doubleton {
  Vertex u;
  Vertex v;

  friend bool operator==(const Doubleton&, const Doubleton&) = default;
  friend auto operator<=>(const Doubleton&, const Doubleton&) = default;
};

// One doubleton per hyperedge of a source hypergraph, in list order:
// doubletons[i] is a 2-subset of edge i. This is an element of the shadow.
struct ShadowSelection {
  Vertex n = 0;
  std::vector<Doubleton> doubletons;
};

// The doubleton with colex index `index` in [0, C(|edge|, 2)).
Doubleton DoubletonAt(std::span<const Vertex> edge, std::uint64_t index);

// Uniform doubleton per hyperedge, independently. One bounded draw per
// hyperedge, in list order.
ShadowSelection SampleShadow(const Hypergraph& h, RandomStream& rng);

// One Bernoulli(p) coin per doubleton, in order; each success adds one edge.
Multigraph Realize(const ShadowSelection& shadow, double p, RandomStream& rng);

// Samples G(n, p; h). For every hyperedge in list order the stream is
// consumed as: one doubleton draw, then one coin. That schedule is part of
// the reproducibility contract. Throws InvalidParameter unless 0 <= p <= 1.
Multigraph Generate(const Hypergraph& h, double p, RandomStream& rng);

struct CoupledGraphs {
  Multigraph lower;
  Multigraph upper;
};

// Monotone coupling in p: lower ~ G(n, p1; h), upper ~ G(n, p2; h), and
// lower is a sub-multigraph of upper. Doubletons and first coins are shared;
// a failed first coin is retried with probability (p2 - p1) / (1 - p1)
// (zero when p1 == 1). Throws InvalidParameter unless 0 <= p1 <= p2 <= 1.
CoupledGraphs CoupledGenerate(const Hypergraph& h, double p1, double p2,
                              RandomStream& rng);

// Monotone coupling in the hypergraph: lower ~ G(n, p; h1),
// upper ~ G(n, p; h2), lower a sub-multigraph of upper. Requires h1 to be a
// sub-multiset of h2.
CoupledGraphs CoupledGenerateNested(const Hypergraph& h1,
                                    const Hypergraph& h2, double p,
                                    RandomStream& rng);

// Fast samplers for the implicit families, used by the experiment harness.
// They never materialise the hypergraph: the successful hyperedges are found
// by geometric skipping through the rank space, and only those get a
// doubleton. Each has the same law as the corresponding reference path
// (Generate on CompleteUniform / BinomialHypergraph / UniformHypergraph) but
// a different stream schedule.
Multigraph SampleComplete(Vertex n, unsigned k, double p, RandomStream& rng);
Multigraph SampleBinomialModel(Vertex n, unsigned k, double p, double q,
                               RandomStream& rng);
Multigraph SampleUniformModel(Vertex n, unsigned k, std::uint64_t m, double p,
                              RandomStream& rng);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_GENERATOR_H_
