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

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "shadowgraph/errors.h"

namespace shadowgraph {

namespace {

void CheckUniformParams(Vertex n, unsigned k) {
  if (k < 2 || k > n) {
    throw InvalidParameter("need 2 <= k <= n, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
}

std::vector<std::size_t> LexOrder(const Hypergraph& h) {
  std::vector<std::size_t> order(h.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto ea = h.edge(a);
                     const auto eb = h.edge(b);
                     return std::lexicographical_compare(ea.begin(), ea.end(),
                                                         eb.begin(), eb.end());
                   });
  return order;
}

bool SameEdge(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vertex> Canonical(std::span<const Vertex> set) {
  std::vector<Vertex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

Hypergraph Hypergraph::FromEdges(
    Vertex n, const std::vector<std::vector<Vertex>>& edges) {
  Hypergraph h(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Vertex> edge = edges[i];
    std::sort(edge.begin(), edge.end());
    if (edge.size() < 2) {
      throw InvalidParameter("hyperedge " + std::to_string(i) +
                             " has fewer than two vertices");
    }
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw InvalidParameter("hyperedge " + std::to_string(i) +
                             " repeats a vertex");
    }
    if (edge.front() < 1 || edge.back() > n) {
      throw InvalidParameter("hyperedge " + std::to_string(i) +
                             " has a label outside 1.." + std::to_string(n));
    }
    h.AppendCanonical(edge);
  }
  return h;
}

void Hypergraph::AppendCanonical(std::span<const Vertex> edge) {
  vertices_.insert(vertices_.end(), edge.begin(), edge.end());
  offsets_.push_back(vertices_.size());
}

Hypergraph CompleteUniform(Vertex n, unsigned k) {
  CheckUniformParams(n, k);
  Hypergraph h(n);
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{1});
  do {
    h.AppendCanonical(subset);
  } while (NextCombination(subset, n));
  return h;
}

Hypergraph BinomialHypergraph(Vertex n, unsigned k, double q,
                              RandomStream& rng) {
  CheckUniformParams(n, k);
  if (!(q >= 0.0 && q <= 1.0)) {
    throw InvalidParameter("q must lie in [0, 1]");
  }
  Hypergraph h(n);
  const std::uint64_t total = Choose(n, k);
  std::vector<Vertex> subset(k);
  // Walk the lexicographic rank space by geometric gaps between inclusions.
  std::uint64_t rank = rng.GeometricSkip(q);
  while (rank < total) {
    UnrankLex(rank, n, subset);
    h.AppendCanonical(subset);
    const std::uint64_t skip = rng.GeometricSkip(q);
    if (skip >= total - rank) break;
    rank += 1 + skip;
  }
  return h;
}

Hypergraph UniformHypergraph(Vertex n, unsigned k, std::uint64_t m,
                             RandomStream& rng) {
  CheckUniformParams(n, k);
  const std::uint64_t total = Choose(n, k);
  if (m > total) {
    throw InvalidParameter("m=" + std::to_string(m) + " exceeds C(n,k)=" +
                           std::to_string(total));
  }
  // Floyd's algorithm: a uniform m-subset of ranks.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.UniformBelow(j + 1);
    const std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    ranks.push_back(pick);
  }
  std::sort(ranks.begin(), ranks.end());
  Hypergraph h(n);
  std::vector<Vertex> subset(k);
  for (const std::uint64_t rank : ranks) {
    UnrankLex(rank, n, subset);
    h.AppendCanonical(subset);
  }
  return h;
}

std::size_t Multiplicity(const Hypergraph& h, std::span<const Vertex> set) {
  const std::vector<Vertex> query = Canonical(set);
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (SameEdge(h.edge(i), query)) ++count;
  }
  return count;
}

std::size_t Degree(const Hypergraph& h, std::span<const Vertex> set) {
  const std::vector<Vertex> query = Canonical(set);
  std::size_t count = 0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (std::includes(e.begin(), e.end(), query.begin(), query.end())) {
      ++count;
    }
  }
  return count;
}

namespace {

// Walks both hypergraphs in lexicographic order, reporting edges of `super`
// unmatched by `sub`. Returns false if `sub` has an edge `super` lacks.
template <typename OnExtra>
bool MergeWalk(const Hypergraph& sub, const Hypergraph& super,
               OnExtra on_extra) {
  const auto sub_order = LexOrder(sub);
  const auto super_order = LexOrder(super);
  std::size_t i = 0;
  for (const std::size_t j : super_order) {
    const auto e = super.edge(j);
    if (i < sub_order.size() && SameEdge(sub.edge(sub_order[i]), e)) {
      ++i;
      continue;
    }
    if (i < sub_order.size()) {
      const auto s = sub.edge(sub_order[i]);
      if (std::lexicographical_compare(s.begin(), s.end(), e.begin(),
                                       e.end())) {
        return false;
      }
    }
    on_extra(j);
  }
  return i == sub_order.size();
}

}  // namespace

bool IsSubMultiset(const Hypergraph& sub, const Hypergraph& super) {
  return MergeWalk(sub, super, [](std::size_t) {});
}

Hypergraph MultisetDifference(const Hypergraph& super, const Hypergraph& sub) {
  std::vector<std::size_t> extra;
  if (!MergeWalk(sub, super, [&](std::size_t j) { extra.push_back(j); })) {
    throw InvalidParameter("hypergraph is not a sub-multiset");
  }
  // Keep the surviving edges in their original list order.
  std::sort(extra.begin(), extra.end());
  Hypergraph diff(super.n());
  for (const std::size_t j : extra) diff.AppendCanonical(super.edge(j));
  return diff;
}

void WriteHypergraph(std::ostream& out, const Hypergraph& h) {
  out << "n=" << h.n() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j > 0) out << ' ';
      out << e[j];
    }
    out << '\n';
  }
}

Hypergraph ReadHypergraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::vector<Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (n < 0) {
      if (line.compare(first, 2, "n=") != 0) {
        throw InvalidParameter("line " + std::to_string(line_no) +
                               ": expected header \"n=<n>\"");
      }
      try {
        n = std::stoll(line.substr(first + 2));
      } catch (const std::exception&) {
        n = -1;
      }
      if (n < 1 || n > UINT32_MAX) {
        throw InvalidParameter("line " + std::to_string(line_no) +
                               ": bad vertex count");
      }
      continue;
    }
    std::istringstream fields(line);
    std::vector<Vertex> edge;
    long long label = 0;
    while (fields >> label) {
      if (label < 1 || label > n) {
        throw InvalidParameter("line " + std::to_string(line_no) +
                               ": label out of range");
      }
      edge.push_back(static_cast<Vertex>(label));
    }
    if (!fields.eof()) {
      throw InvalidParameter("line " + std::to_string(line_no) +
                             ": expected integers");
    }
    edges.push_back(std::move(edge));
  }
  if (n < 0) throw InvalidParameter("missing header \"n=<n>\"");
  return Hypergraph::FromEdges(static_cast<Vertex>(n), edges);
}

}  // namespace shadowgraph
