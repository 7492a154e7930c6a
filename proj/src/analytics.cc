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

#include "shadowgraph/analytics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/errors.h"
#include "shadowgraph/kernels.h"

namespace shadowgraph {

namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(name) + " must lie in [0, 1]");
  }
}

void CheckFamily(Vertex n, unsigned k) {
  if (k < 2 || k > n) throw InvalidParameter("need 2 <= k <= n");
}

void CheckVertex(const Hypergraph& h, Vertex v) {
  if (v < 1 || v > h.n()) {
    throw InvalidParameter("vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(h.n()));
  }
}

// Poisson-binomial over the given trial probabilities, using the binomial
// closed form when they all coincide.
DiscreteDistribution TrialLaw(const std::vector<double>& probs) {
  if (!probs.empty() &&
      std::all_of(probs.begin(), probs.end(),
                  [&](double q) { return q == probs.front(); })) {
    return Binomial(probs.size(), probs.front());
  }
  return PoissonBinomial(probs);
}

}  // namespace

DiscreteDistribution DegreeLaw(const Hypergraph& h, Vertex v, double p) {
  CheckVertex(h, v);
  CheckProbability(p, "p");
  std::vector<double> probs;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    if (std::binary_search(e.begin(), e.end(), v)) {
      probs.push_back(2.0 * p / static_cast<double>(e.size()));
    }
  }
  return TrialLaw(probs);
}

DiscreteDistribution PairEdgeLaw(const Hypergraph& h, Vertex i, Vertex j,
                                 double p) {
  CheckVertex(h, i);
  CheckVertex(h, j);
  if (i == j) throw InvalidParameter("pair law needs distinct vertices");
  CheckProbability(p, "p");
  std::vector<double> probs;
  for (std::size_t e_index = 0; e_index < h.num_edges(); ++e_index) {
    const auto e = h.edge(e_index);
    if (std::binary_search(e.begin(), e.end(), i) &&
        std::binary_search(e.begin(), e.end(), j)) {
      probs.push_back(p / static_cast<double>(Choose(e.size(), 2)));
    }
  }
  return TrialLaw(probs);
}

DiscreteDistribution DegreeLawBinomialModel(Vertex n, unsigned k, double p,
                                            double q) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  return Binomial(Choose(n - 1, k - 1), 2.0 * p * q / k);
}

DiscreteDistribution DegreeLawUniformModel(Vertex n, unsigned k, double p,
                                           std::uint64_t m) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  const std::uint64_t total = Choose(n, k);
  if (m > total) throw InvalidParameter("m exceeds C(n,k)");
  const std::uint64_t containing = Choose(n - 1, k - 1);
  const DiscreteDistribution edges_at_v = Hypergeometric(total, containing, m);
  const double trial = 2.0 * p / k;
  std::vector<double> mixture(edges_at_v.size(), 0.0);
  for (std::size_t w = 0; w < edges_at_v.size(); ++w) {
    const double weight = edges_at_v[w];
    if (weight == 0.0) continue;
    const DiscreteDistribution given_w = Binomial(w, trial);
    kernels::Axpy(weight, given_w.pmf(),
                  std::span<double>(mixture).first(given_w.size()));
  }
  return DiscreteDistribution(std::move(mixture));
}

double EmptyProbability(std::uint64_t edge_count, double p) {
  CheckProbability(p, "p");
  return std::pow(1.0 - p, static_cast<double>(edge_count));
}

double ExpectedIsolated(Vertex n, unsigned k, double p) {
  CheckFamily(n, k);
  CheckProbability(p, "p");
  return n * std::pow(1.0 - 2.0 * p / k,
                      static_cast<double>(Choose(n - 1, k - 1)));
}

double ExpectedTrianglesBinomial3(Vertex n, double p, double q) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  const double pq = p * q;
  const double t = BinomialTailAtLeastOne(n - 3, pq / 3.0);
  return ChooseReal(n, 3) * ((1.0 - pq) * t * t * t + pq * t * t);
}

double ExpectedTrianglesUniform3(Vertex n, double p, std::uint64_t m) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  CheckProbability(p, "p");
  const std::uint64_t total = Choose(n, 3);
  if (m > total) throw InvalidParameter("m exceeds C(n,3)");
  if (m == 0) return 0.0;
  const std::uint64_t per_pair = n - 3;  // 3-subsets other than T holding a pair
  const double trial = p / 3.0;
  std::vector<double> tail(per_pair + 1);
  for (std::uint64_t w = 0; w <= per_pair; ++w) {
    tail[w] = BinomialTailAtLeastOne(w, trial);
  }

  // Moments E[f1 f2 f3] and E[f1 f2] (= E[f1 f3] = E[f2 f3] by
  // exchangeability) of f_i = tail[W_i], for a sample of `drawn` hyperedges
  // out of the total - 1 that differ from T.
  struct Moments {
    double triple = 0.0;
    double pair = 0.0;
  };
  const auto moments = [&](std::uint64_t drawn) {
    Moments result;
    const std::uint64_t others = total - 1;
    const DiscreteDistribution w1 = Hypergeometric(others, per_pair, drawn);
    for (std::uint64_t a = 0; a < w1.size(); ++a) {
      if (w1[a] == 0.0) continue;
      const DiscreteDistribution w2 =
          Hypergeometric(others - per_pair, per_pair, drawn - a);
      for (std::uint64_t b = 0; b < w2.size(); ++b) {
        const double ab = w1[a] * w2[b];
        if (ab == 0.0) continue;
        const DiscreteDistribution w3 =
            Hypergeometric(others - 2 * per_pair, per_pair, drawn - a - b);
        const double f3 = kernels::Dot(
            w3.pmf(), std::span<const double>(tail).first(w3.size()));
        result.triple += ab * tail[a] * tail[b] * f3;
        result.pair += ab * tail[a] * tail[b];
      }
    }
    return result;
  };

  const double with_t = static_cast<double>(m) / static_cast<double>(total);
  double present = 0.0;
  if (m < total) present += (1.0 - with_t) * moments(m).triple;
  const Moments inside = moments(m - 1);
  present += with_t * ((1.0 - p) * inside.triple + p * inside.pair);
  return static_cast<double>(total) * present;
}

HypergeometricProduct HypergeometricProduct::Statement(Vertex n, double p,
                                                       std::uint64_t m) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  return {Choose(n, 3), n - 3u, m, p};
}

HypergeometricProduct HypergeometricProduct::Proof(Vertex n, double p,
                                                   std::uint64_t m) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  return {Choose(n - 3, 3), n - 3u, m, p};
}

double ExpectedTrianglesUniform3Product(Vertex n, double p, std::uint64_t m,
                                        const HypergeometricProduct& params) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  CheckProbability(p, "p");
  CheckProbability(params.trial_success, "trial success");
  const std::uint64_t total = Choose(n, 3);
  if (m > total) throw InvalidParameter("m exceeds C(n,3)");
  const DiscreteDistribution w =
      Hypergeometric(params.population, params.successes, params.sample);
  std::vector<double> tail(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    tail[j] = BinomialTailAtLeastOne(j, params.trial_success);
  }
  const double t = kernels::Dot(w.pmf(), tail);
  const double pm = p * static_cast<double>(m) / static_cast<double>(total);
  return static_cast<double>(total) * ((1.0 - pm) * t * t * t + pm * t * t);
}

TransitionMatrix TransitionMatrix::TriangleChain(double p) {
  CheckProbability(p, "p");
  TransitionMatrix matrix;
  // From state j, 3 - j of the six doubletons of the next 4-subset hit an
  // unjoined pair of T.
  for (int j = 0; j < 3; ++j) {
    const double advance = p * (3 - j) / 6.0;
    matrix.rows_[j][j] = 1.0 - advance;
    matrix.rows_[j][j + 1] = advance;
  }
  matrix.rows_[3][3] = 1.0;
  return matrix;
}

TransitionMatrix::Row TransitionMatrix::Propagate(const Row& start,
                                                  std::uint64_t steps) const {
  Row state = start;
  for (std::uint64_t s = 0; s < steps; ++s) {
    Row next{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (state[i] == 0.0) continue;
      for (std::size_t j = 0; j < 4; ++j) next[j] += state[i] * rows_[i][j];
    }
    state = next;
  }
  return state;
}

TransitionMatrix::Row TriangleChainRow(Vertex n, double p) {
  if (n < 3) throw InvalidParameter("need n >= 3");
  return TransitionMatrix::TriangleChain(p).Propagate({1.0, 0.0, 0.0, 0.0},
                                                      n - 3);
}

double ExpectedTrianglesComplete4(Vertex n, double p) {
  if (n < 4) throw InvalidParameter("need n >= 4");
  const TransitionMatrix::Row row = TriangleChainRow(n, p);
  const double x = BinomialTailAtLeastOne(Choose(n - 3, 2), p / 6.0);
  double present = 1.0 - (row[0] + row[1] + row[2]);
  for (int i = 0; i < 3; ++i) present += row[i] * std::pow(x, 3 - i);
  return ChooseReal(n, 3) * present;
}

}  // namespace shadowgraph
