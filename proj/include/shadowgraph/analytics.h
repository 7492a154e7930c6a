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

#ifndef SHADOWGRAPH_ANALYTICS_H_
#define SHADOWGRAPH_ANALYTICS_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "shadowgraph/distribution.h"
#include "shadowgraph/hypergraph.h"

// Closed-form laws and expectations for G(n, p; H). All functions are pure
// and throw InvalidParameter on out-of-range arguments.
namespace shadowgraph {

// Law of deg_G(v): one trial of probability 2p/|H| per hyperedge H that
// contains v. Binomial when all those hyperedges have the same size.
DiscreteDistribution DegreeLaw(const Hypergraph& h, Vertex v, double p);

// Law of the multiplicity of {i, j}: one trial of probability p / C(|H|, 2)
// per hyperedge containing both.
DiscreteDistribution PairEdgeLaw(const Hypergraph& h, Vertex i, Vertex j,
                                 double p);

// Degree of a vertex when H is the binomial random k-uniform hypergraph:
// Bin(C(n-1, k-1), 2pq/k).
DiscreteDistribution DegreeLawBinomialModel(Vertex n, unsigned k, double p,
                                            double q);

// Degree of a vertex when H is a uniform random set of m k-subsets:
// sum_w Hyp(C(n,k), C(n-1,k-1), m)[w] * Bin(w, 2p/k).
DiscreteDistribution DegreeLawUniformModel(Vertex n, unsigned k, double p,
                                           std::uint64_t m);

// (1 - p)^edge_count.
double EmptyProbability(std::uint64_t edge_count, double p);

// n * (1 - 2p/k)^C(n-1, k-1) for the complete k-uniform hypergraph.
double ExpectedIsolated(Vertex n, unsigned k, double p);

// Expected triangle count when H is the binomial random 3-uniform
// hypergraph with inclusion probability q:
//   C(n,3) * ((1 - pq) t^3 + pq t^2),  t = P(Bin(n-3, pq/3) >= 1).
double ExpectedTrianglesBinomial3(Vertex n, double p, double q);

// Expected triangle count when H is a uniform random set of m 3-subsets.
//
// Exact evaluation. Fix a triple T. Conditioned on whether T itself was
// drawn, the numbers (W_1, W_2, W_3) of drawn hyperedges other than T that
// contain each pair of T follow a multivariate hypergeometric law (one
// sample without replacement, so they are not independent). Each such
// hyperedge joins its pair with probability p/3.
double ExpectedTrianglesUniform3(Vertex n, double p, std::uint64_t m);

// The same expectation under the product form
//   C(n,3) * ((1 - p m / C(n,3)) t^3 + (p m / C(n,3)) t^2),
//   t = sum_w Hyp(population, successes, sample)[w] * P(Bin(w, s) >= 1),
// with the hypergeometric parameters and per-trial success s supplied.
// The presets reproduce two candidate readings of the closed form; neither
// agrees with simulation, see README.
struct HypergeometricProduct {
  std::uint64_t population = 0;
  std::uint64_t successes = 0;
  std::uint64_t sample = 0;
  double trial_success = 0.0;

  // Hyp(C(n,3), n-3, m) with per-trial success p.
  static HypergeometricProduct Statement(Vertex n, double p, std::uint64_t m);
  // Hyp(C(n-3,3), n-3, m) with per-trial success p.
  static HypergeometricProduct Proof(Vertex n, double p, std::uint64_t m);
};
double ExpectedTrianglesUniform3Product(Vertex n, double p, std::uint64_t m,
                                        const HypergeometricProduct& params);

// 4x4 stochastic matrix over states {0, 1, 2, 3}: the number of pairs of a
// fixed triple T already joined after processing the 4-subsets containing T
// one at a time. Upper bidiagonal, state 3 absorbing.
class TransitionMatrix {
 public:
  using Row = std::array<double, 4>;

  // Rows [1-p/2, p/2, 0, 0], [0, 1-p/3, p/3, 0], [0, 0, 1-p/6, p/6],
  // [0, 0, 0, 1].
  static TransitionMatrix TriangleChain(double p);

  const Row& row(std::size_t i) const { return rows_[i]; }

  // Distribution after `steps` transitions from `start`, by iterated
  // vector-matrix products.
  Row Propagate(const Row& start, std::uint64_t steps) const;

 private:
  std::array<Row, 4> rows_{};
};

// Row 0 of P^(n-3) for the triangle chain.
TransitionMatrix::Row TriangleChainRow(Vertex n, double p);

// Expected triangle count for the complete 4-uniform hypergraph:
//   C(n,3) * ((1 - sum_{i<3} r_i) + sum_{i<3} r_i x^(3-i)),
// r = TriangleChainRow(n, p), x = P(Bin(C(n-3, 2), p/6) >= 1).
double ExpectedTrianglesComplete4(Vertex n, double p);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_ANALYTICS_H_
