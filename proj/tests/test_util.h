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

#ifndef SHADOWGRAPH_TESTS_TEST_UTIL_H_
#define SHADOWGRAPH_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "shadowgraph/hypergraph.h"
#include "shadowgraph/multigraph.h"

namespace shadowgraph::testing {

// Walks every outcome of G(n, p; h): each hyperedge independently yields
// nothing (probability 1 - p) or one of its C(s, 2) pairs (probability
// p / C(s, 2) each). `visit(pairs, probability)` sees every outcome once.
template <typename Visit>
void EnumerateOutcomes(const Hypergraph& h, double p, Visit&& visit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const auto recurse = [&](auto&& self, std::size_t e, double prob) -> void {
    if (prob == 0.0) return;
    if (e == h.num_edges()) {
      visit(pairs, prob);
      return;
    }
    const auto edge = h.edge(e);
    const double s = static_cast<double>(edge.size());
    const double each = p / (s * (s - 1.0) / 2.0);
    self(self, e + 1, prob * (1.0 - p));
    for (std::size_t a = 0; a < edge.size(); ++a) {
      for (std::size_t b = a + 1; b < edge.size(); ++b) {
        pairs.emplace_back(edge[a], edge[b]);
        self(self, e + 1, prob * each);
        pairs.pop_back();
      }
    }
  };
  recurse(recurse, 0, 1.0);
}

// Expectation of f(graph) over G(n, p; h), with compensated summation.
template <typename F>
double BruteExpectation(const Hypergraph& h, double p, F&& f) {
  double total = 0.0;
  double carry = 0.0;
  EnumerateOutcomes(h, p, [&](const auto& pairs, double prob) {
    const double term = prob * f(Multigraph::FromPairs(h.n(), pairs));
    const double next = total + term;
    carry += std::abs(total) >= std::abs(term) ? (total - next) + term
                                               : (term - next) + total;
    total = next;
  });
  return total + carry;
}

// C(n, k) * q^k * (1 - q)^(n - k), evaluated directly.
inline double BinomialPmf(std::uint64_t n, std::uint64_t k, double q) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return c * std::pow(q, static_cast<double>(k)) *
         std::pow(1.0 - q, static_cast<double>(n - k));
}

inline double TotalVariation(const std::vector<double>& a,
                             const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    d += std::abs(x - y);
  }
  return d / 2.0;
}

// Every sub-multiset of `edges` of size m, as hypergraphs on n vertices.
template <typename Visit>
void ForEachSubset(Vertex n, const std::vector<std::vector<Vertex>>& edges,
                   std::size_t m, Visit&& visit) {
  std::vector<std::size_t> index(m);
  for (std::size_t i = 0; i < m; ++i) index[i] = i;
  while (true) {
    std::vector<std::vector<Vertex>> chosen;
    for (const std::size_t i : index) chosen.push_back(edges[i]);
    visit(Hypergraph::FromEdges(n, chosen));
    std::size_t i = m;
    while (i > 0 && index[i - 1] == edges.size() - m + i - 1) --i;
    if (i == 0) return;
    ++index[i - 1];
    for (std::size_t j = i; j < m; ++j) index[j] = index[j - 1] + 1;
  }
}

inline std::vector<std::vector<Vertex>> AllSubsets(Vertex n, unsigned k) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v + 1);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace shadowgraph::testing

#endif  // SHADOWGRAPH_TESTS_TEST_UTIL_H_
