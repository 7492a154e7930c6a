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

#ifndef SHADOWGRAPH_ORACLE_H_
#define SHADOWGRAPH_ORACLE_H_

#include <cstdint>

#include "shadowgraph/distribution.h"
#include "shadowgraph/hypergraph.h"
#include "shadowgraph/predicate.h"

// Exact probabilities by brute force over the shadow mixture: every
// selection of one doubleton per hyperedge (each equally likely), and for
// each selection every pattern of coin outcomes weighted
// p^s (1 - p)^(E - s). At p = 0 or p = 1 the coin enumeration collapses to
// a single pattern.
//
// The enumeration is a mixed-radix counter over per-hyperedge doubleton
// indices (radix C(|H|, 2)); the coin patterns are bitmasks processed by the
// SIMD kernels where the predicate allows it. These routines are the ground
// truth that the closed forms in analytics.h are checked against.
namespace shadowgraph {

struct OracleOptions {
  // Upper bound on (shadow selections) x (coin patterns) for any single
  // enumeration. Checked in log space before enumerating.
  double budget = 1e9;
  // Workers splitting the outer shadow range. The result does not depend on
  // the split beyond floating-point reassociation.
  unsigned threads = 1;
};

struct OracleResult {
  double value = 0.0;
  std::uint64_t enumerated_states = 0;
};

// P(G(n, p; h) satisfies pred). Pair-adjacency only enumerates hyperedges
// containing the pair; every other predicate enumerates all of h. Throws
// BudgetExceeded or InvalidParameter.
OracleResult ExactPropertyProbability(const Hypergraph& h, double p,
                                      const PropertyPredicate& pred,
                                      const OracleOptions& options = {});

// Expected number of triangles: sum over triples T of P(T is a triangle),
// each enumerated over the hyperedges meeting T in at least two vertices
// (the others cannot place an edge inside T). The budget applies to each
// triple's enumeration separately.
OracleResult ExactExpectedTriangles(const Hypergraph& h, double p,
                                    const OracleOptions& options = {});

struct OracleDistribution {
  DiscreteDistribution distribution;
  std::uint64_t enumerated_states = 0;
};

// Exact law of the multiplicity of {i, j}, enumerating the hyperedges that
// contain both.
OracleDistribution ExactEdgeCountDistribution(
    const Hypergraph& h, double p, Vertex i, Vertex j,
    const OracleOptions& options = {});

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_ORACLE_H_
