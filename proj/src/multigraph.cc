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

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "shadowgraph/errors.h"

namespace shadowgraph {

namespace {

void CheckVertex(const Multigraph& g, Vertex v) {
  if (v < 1 || v > g.n()) {
    throw InvalidParameter("vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(g.n()));
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Multigraph Multigraph::FromPairs(
    Vertex n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  Multigraph g(n);
  for (auto& [u, v] : pairs) {
    if (u == v) throw InvalidParameter("self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw InvalidParameter("pair label out of range");
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [u, v] : pairs) {
    if (!g.pairs_.empty() && g.pairs_.back().u == u && g.pairs_.back().v == v) {
      ++g.pairs_.back().mult;
    } else {
      g.pairs_.push_back({u, v, 1});
    }
  }
  return g;
}

std::uint64_t Multigraph::total_edges() const {
  std::uint64_t total = 0;
  for (const auto& p : pairs_) total += p.mult;
  return total;
}

std::uint32_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), std::pair{u, v},
      [](const PairMultiplicity& p, const std::pair<Vertex, Vertex>& key) {
        return std::pair{p.u, p.v} < key;
      });
  if (it == pairs_.end() || it->u != u || it->v != v) return 0;
  return it->mult;
}

bool IsSimple(const Multigraph& g) {
  return std::all_of(g.pairs().begin(), g.pairs().end(),
                     [](const PairMultiplicity& p) { return p.mult == 1; });
}

bool IsConnected(const Multigraph& g) {
  if (g.n() <= 1) return true;
  DisjointSets sets(g.n() + 1);
  std::size_t components = g.n();
  for (const auto& p : g.pairs()) {
    if (sets.Union(p.u, p.v) && --components == 1) return true;
  }
  return components == 1;
}

std::size_t CountIsolated(const Multigraph& g) {
  std::vector<bool> touched(g.n() + 1, false);
  std::size_t isolated = g.n();
  for (const auto& p : g.pairs()) {
    for (const Vertex x : {p.u, p.v}) {
      if (!touched[x]) {
        touched[x] = true;
        --isolated;
      }
    }
  }
  return isolated;
}

std::uint64_t CountTriangles(const Multigraph& g) {
  // Forward adjacency (neighbours larger than the vertex) is already sorted
  // because pairs are stored in ascending order.
  std::vector<std::size_t> start(g.n() + 2, 0);
  for (const auto& p : g.pairs()) ++start[p.u + 1];
  for (std::size_t v = 1; v < start.size(); ++v) start[v] += start[v - 1];
  std::vector<Vertex> forward(g.pairs().size());
  for (std::size_t i = 0; i < g.pairs().size(); ++i) {
    forward[i] = g.pairs()[i].v;
  }
  std::uint64_t triangles = 0;
  for (const auto& p : g.pairs()) {
    // Common forward neighbours of u and v, both larger than v.
    auto a = forward.begin() + start[p.u];
    const auto a_end = forward.begin() + start[p.u + 1];
    auto b = forward.begin() + start[p.v];
    const auto b_end = forward.begin() + start[p.v + 1];
    a = std::upper_bound(a, a_end, p.v);
    while (a != a_end && b != b_end) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++triangles;
        ++a;
        ++b;
      }
    }
  }
  return triangles;
}

std::uint64_t Degree(const Multigraph& g, Vertex v) {
  CheckVertex(g, v);
  std::uint64_t degree = 0;
  for (const auto& p : g.pairs()) {
    if (p.u == v || p.v == v) degree += p.mult;
  }
  return degree;
}

bool IsSubgraph(const Multigraph& g1, const Multigraph& g2) {
  if (g1.n() != g2.n()) {
    throw InvalidParameter("IsSubgraph: vertex counts differ");
  }
  const auto a = g1.pairs();
  const auto b = g2.pairs();
  std::size_t j = 0;
  for (const auto& p : a) {
    while (j < b.size() && std::pair{b[j].u, b[j].v} < std::pair{p.u, p.v}) {
      ++j;
    }
    if (j == b.size() || b[j].u != p.u || b[j].v != p.v || b[j].mult < p.mult) {
      return false;
    }
  }
  return true;
}

void WriteMultigraph(std::ostream& out, const Multigraph& g) {
  out << "n=" << g.n() << '\n';
  for (const auto& p : g.pairs()) {
    out << p.u << ' ' << p.v << ' ' << p.mult << '\n';
  }
}

Multigraph ReadMultigraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0) {
    throw InvalidParameter("missing header \"n=<n>\"");
  }
  const auto n = static_cast<Vertex>(std::stoul(line.substr(2)));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    Vertex u = 0, v = 0;
    std::uint32_t mult = 0;
    if (!(fields >> u >> v >> mult) || mult == 0) {
      throw InvalidParameter("malformed pair line: " + line);
    }
    pairs.insert(pairs.end(), mult, {u, v});
  }
  return Multigraph::FromPairs(n, std::move(pairs));
}

}  // namespace shadowgraph
