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

#ifndef SHADOWGRAPH_MULTIGRAPH_H_
#define SHADOWGRAPH_MULTIGRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "shadowgraph/combinatorics.h"

namespace shadowgraph {

// Multiplicity of one unordered vertex pair u < v.
struct PairMultiplicity {
  Vertex u;
  Vertex v;
  std::uint32_t mult;

  friend bool operator==(const PairMultiplicity&,
                         const PairMultiplicity&) = default;
};

// A loopless multigraph on [n], stored as the list of present pairs in
// ascending (u, v) order with strictly positive multiplicities.
class Multigraph {
 public:
  explicit Multigraph(Vertex n = 0) : n_(n) {}

  // One edge per list entry; pairs may be given in either orientation and
  // may repeat. Throws InvalidParameter on loops or out-of-range labels.
  static Multigraph FromPairs(Vertex n,
                              std::vector<std::pair<Vertex, Vertex>> pairs);

  Vertex n() const { return n_; }
  std::span<const PairMultiplicity> pairs() const { return pairs_; }
  std::uint64_t total_edges() const;

  // Multiplicity of {u, v}; zero when absent.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<PairMultiplicity> pairs_;
};

bool IsSimple(const Multigraph& g);

// Connectivity of the underlying simple graph on all n vertices. Graphs on
// zero or one vertex are connected.
bool IsConnected(const Multigraph& g);

std::size_t CountIsolated(const Multigraph& g);

// Vertex triples whose three pairs are all present; multiplicities beyond
// one do not add to the count.
std::uint64_t CountTriangles(const Multigraph& g);

// Sum of multiplicities of pairs containing v.
std::uint64_t Degree(const Multigraph& g, Vertex v);

// True iff every pair has multiplicity in g1 at most that in g2.
bool IsSubgraph(const Multigraph& g1, const Multigraph& g2);

// Header "n=<n>", then "u v mult" per present pair in ascending order.
void WriteMultigraph(std::ostream& out, const Multigraph& g);
Multigraph ReadMultigraph(std::istream& in);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_MULTIGRAPH_H_
