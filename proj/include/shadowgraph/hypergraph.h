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

#ifndef SHADOWGRAPH_HYPERGRAPH_H_
#define SHADOWGRAPH_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/random.h"

namespace shadowgraph {

// A multi-hypergraph on [n]: an ordered list of hyperedges, each a strictly
// increasing list of at least two labels in 1..n. Identical hyperedges may
// repeat; edge i is the i-th entry of the list.
//
// Storage is flat (CSR-style) so that hyperedges are cheap spans.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(Vertex n) : n_(n) {}

  // Validates every hyperedge and sorts its labels. Throws InvalidParameter
  // on a hyperedge with fewer than two vertices, a repeated vertex, or a
  // label outside 1..n.
  static Hypergraph FromEdges(Vertex n,
                              const std::vector<std::vector<Vertex>>& edges);

  Vertex n() const { return n_; }
  std::size_t num_edges() const { return offsets_.size() - 1; }
  bool empty() const { return num_edges() == 0; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t edge_size(std::size_t i) const {
    return offsets_[i + 1] - offsets_[i];
  }

  // Appends a hyperedge that is already canonical. Used by the constructors
  // below; callers outside the library should go through FromEdges.
  void AppendCanonical(std::span<const Vertex> edge);

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> offsets_{0};
};

// All k-subsets of [n], each once, in lexicographic order.
Hypergraph CompleteUniform(Vertex n, unsigned k);

// Each k-subset of [n] kept independently with probability q. Output is in
// lexicographic order.
Hypergraph BinomialHypergraph(Vertex n, unsigned k, double q,
                              RandomStream& rng);

// A uniformly random set of m distinct k-subsets of [n], in lexicographic
// order.
Hypergraph UniformHypergraph(Vertex n, unsigned k, std::uint64_t m,
                             RandomStream& rng);

// Number of list entries equal to `set` (order of `set` is irrelevant).
std::size_t Multiplicity(const Hypergraph& h, std::span<const Vertex> set);

// Number of hyperedges, with multiplicity, containing every vertex of `set`.
std::size_t Degree(const Hypergraph& h, std::span<const Vertex> set);

// True iff every hyperedge occurs in `sub` at most as often as in `super`.
bool IsSubMultiset(const Hypergraph& sub, const Hypergraph& super);

// super minus sub, as multisets; requires IsSubMultiset(sub, super).
Hypergraph MultisetDifference(const Hypergraph& super, const Hypergraph& sub);

// Text format: a header line "n=<n>" followed by one hyperedge per line,
// space-separated ascending labels. Blank lines and lines starting with '#'
// are ignored on input.
void WriteHypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph ReadHypergraph(std::istream& in);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_HYPERGRAPH_H_
