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

#include "shadowgraph/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/errors.h"
#include "shadowgraph/generator.h"
#include "shadowgraph/kernels.h"

namespace shadowgraph {

namespace {

using EdgeList = std::vector<std::span<const Vertex>>;

// Coin patterns are split into a low block, whose weights are tabulated and
// handed to the kernels, and a high block iterated in an outer loop.
constexpr unsigned kMaxLowBits = 16;
constexpr unsigned kMaxCoinBits = 40;

class CoinPatterns {
 public:
  CoinPatterns(std::size_t bits, double p) : bits_(bits) {
    if (p <= 0.0 || p >= 1.0) {
      collapsed_ = true;
      return;
    }
    if (bits > kMaxCoinBits) {
      throw BudgetExceeded("coin enumeration over " + std::to_string(bits) +
                           " hyperedges is not supported");
    }
    low_bits_ = std::min<unsigned>(bits, kMaxLowBits);
    high_bits_ = static_cast<unsigned>(bits) - low_bits_;
    success_pow_.resize(bits + 1);
    failure_pow_.resize(bits + 1);
    for (std::size_t s = 0; s <= bits; ++s) {
      success_pow_[s] = std::pow(p, static_cast<double>(s));
      failure_pow_[s] = std::pow(1.0 - p, static_cast<double>(s));
    }
    low_weights_.resize(std::size_t{1} << low_bits_);
    for (std::uint64_t mask = 0; mask < low_weights_.size(); ++mask) {
      const int s = std::popcount(mask);
      low_weights_[mask] = success_pow_[s] * failure_pow_[low_bits_ - s];
    }
  }

  // True when p is 0 or 1 and a single coin pattern carries all the mass.
  bool collapsed() const { return collapsed_; }
  std::size_t bits() const { return bits_; }
  unsigned low_bits() const { return low_bits_; }
  std::uint64_t high_count() const { return std::uint64_t{1} << high_bits_; }
  std::span<const double> low_weights() const { return low_weights_; }
  std::uint64_t low_mask() const { return (std::uint64_t{1} << low_bits_) - 1; }

  double HighWeight(std::uint64_t high) const {
    const int s = std::popcount(high);
    return success_pow_[s] * failure_pow_[high_bits_ - s];
  }
  double Weight(std::uint64_t mask) const {
    return low_weights_[mask & low_mask()] * HighWeight(mask >> low_bits_);
  }
  std::uint64_t count() const {
    return collapsed_ ? 1 : std::uint64_t{1} << bits_;
  }

 private:
  std::size_t bits_;
  bool collapsed_ = false;
  unsigned low_bits_ = 0;
  unsigned high_bits_ = 0;
  std::vector<double> success_pow_;
  std::vector<double> failure_pow_;
  std::vector<double> low_weights_;
};

// Total coin weight of patterns that intersect every group.
double GroupsHitWeight(const CoinPatterns& coins,
                       std::span<const std::uint64_t> groups) {
  std::vector<std::uint64_t> pending;
  pending.reserve(groups.size());
  double total = 0.0;
  for (std::uint64_t high = 0; high < coins.high_count(); ++high) {
    pending.clear();
    bool possible = true;
    for (const std::uint64_t g : groups) {
      if ((high & (g >> coins.low_bits())) != 0) continue;  // already hit
      const std::uint64_t low = g & coins.low_mask();
      if (low == 0) {
        possible = false;
        break;
      }
      pending.push_back(low);
    }
    if (!possible) continue;
    total += coins.HighWeight(high) *
             kernels::AllGroupsHitWeight(pending, coins.low_weights());
  }
  return total;
}

std::uint64_t PairCount(std::size_t size) { return size * (size - 1) / 2; }

void CheckBudget(const EdgeList& edges, double p, double budget) {
  double log_states = 0.0;
  for (const auto& e : edges) {
    log_states += std::log(static_cast<double>(PairCount(e.size())));
  }
  if (p > 0.0 && p < 1.0) {
    log_states += static_cast<double>(edges.size()) * std::log(2.0);
  }
  if (log_states > std::log(budget) + 1e-9 || log_states > 62 * std::log(2.0)) {
    throw BudgetExceeded("enumeration needs about " +
                         std::to_string(std::exp(log_states)) +
                         " states; budget is " + std::to_string(budget));
  }
}

std::uint64_t ShadowCount(const EdgeList& edges) {
  std::uint64_t count = 1;
  for (const auto& e : edges) count *= PairCount(e.size());
  return count;
}

// Visits shadow selections with mixed-radix index in [begin, end); edge 0
// is the least significant digit.
template <typename Visit>
void ForEachShadow(const EdgeList& edges, std::uint64_t begin,
                   std::uint64_t end, Visit&& visit) {
  const std::size_t count = edges.size();
  std::vector<std::uint64_t> digit(count);
  std::vector<std::uint64_t> radix(count);
  std::vector<Doubleton> chosen(count);
  std::uint64_t rest = begin;
  for (std::size_t i = 0; i < count; ++i) {
    radix[i] = PairCount(edges[i].size());
    digit[i] = rest % radix[i];
    rest /= radix[i];
    chosen[i] = DoubletonAt(edges[i], digit[i]);
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    visit(std::span<const Doubleton>(chosen));
    for (std::size_t i = 0; i < count; ++i) {
      if (++digit[i] < radix[i]) {
        chosen[i] = DoubletonAt(edges[i], digit[i]);
        break;
      }
      digit[i] = 0;
      chosen[i] = DoubletonAt(edges[i], 0);
    }
  }
}

// Sums `contribution(chosen)` over all shadow selections, splitting the
// range across workers. Partial sums are combined in chunk order.
double SumOverShadows(
    const EdgeList& edges, unsigned threads,
    const std::function<double(std::span<const Doubleton>)>& contribution) {
  const std::uint64_t total = ShadowCount(edges);
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(total, 1));
  std::vector<double> partial(workers, 0.0);
  const auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    double sum = 0.0;
    ForEachShadow(edges, begin, end,
                  [&](std::span<const Doubleton> chosen) {
                    sum += contribution(chosen);
                  });
    partial[w] = sum;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  double sum = 0.0;
  for (const double s : partial) sum += s;
  return sum;
}

std::uint64_t MaskOf(std::span<const Doubleton> chosen, Doubleton target) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i] == target) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Contains(std::span<const Vertex> e, Vertex v) {
  return std::binary_search(e.begin(), e.end(), v);
}

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("p must lie in [0, 1]");
}

void CheckPair(const Hypergraph& h, Vertex i, Vertex j) {
  if (i == j || i < 1 || j < 1 || i > h.n() || j > h.n()) {
    throw InvalidParameter("pair must be two distinct vertices in 1..n");
  }
}

EdgeList EdgesContaining(const Hypergraph& h, Vertex i, Vertex j) {
  EdgeList edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (Contains(h.edge(e), i) && Contains(h.edge(e), j)) {
      edges.push_back(h.edge(e));
    }
  }
  return edges;
}

}  // namespace

OracleResult ExactPropertyProbability(const Hypergraph& h, double p,
                                      const PropertyPredicate& pred,
                                      const OracleOptions& options) {
  CheckProbability(p);
  if (p == 0.0) return {pred(Multigraph(h.n())) ? 1.0 : 0.0, 1};

  EdgeList edges;
  const bool pair_query =
      pred.kind() == PropertyPredicate::Kind::kPairAdjacent;
  if (pair_query) {
    CheckPair(h, pred.i(), pred.j());
    edges = EdgesContaining(h, pred.i(), pred.j());
  } else {
    for (std::size_t e = 0; e < h.num_edges(); ++e) edges.push_back(h.edge(e));
  }
  CheckBudget(edges, p, options.budget);
  const CoinPatterns coins(edges.size(), p);
  const std::uint64_t shadows = ShadowCount(edges);

  std::function<double(std::span<const Doubleton>)> contribution;
  if (pair_query) {
    const Doubleton target{pred.i(), pred.j()};
    contribution = [&coins, target](std::span<const Doubleton> chosen) {
      if (coins.collapsed()) {
        return std::find(chosen.begin(), chosen.end(), target) != chosen.end()
                   ? 1.0
                   : 0.0;
      }
      const std::uint64_t group = MaskOf(chosen, target);
      if (group == 0) return 0.0;
      return GroupsHitWeight(coins, std::span<const std::uint64_t>(&group, 1));
    };
  } else if (pred.kind() == PropertyPredicate::Kind::kHasEdge) {
    contribution = [&coins](std::span<const Doubleton> chosen) {
      if (chosen.empty()) return 0.0;
      if (coins.collapsed()) return 1.0;
      const std::uint64_t group = (std::uint64_t{1} << chosen.size()) - 1;
      return GroupsHitWeight(coins, std::span<const std::uint64_t>(&group, 1));
    };
  } else {
    const Vertex n = h.n();
    contribution = [&coins, &pred, n](std::span<const Doubleton> chosen) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      pairs.reserve(chosen.size());
      if (coins.collapsed()) {
        for (const Doubleton& d : chosen) pairs.emplace_back(d.u, d.v);
        return pred(Multigraph::FromPairs(n, std::move(pairs))) ? 1.0 : 0.0;
      }
      double sum = 0.0;
      for (std::uint64_t mask = 0; mask < coins.count(); ++mask) {
        pairs.clear();
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          if ((mask >> i) & 1) pairs.emplace_back(chosen[i].u, chosen[i].v);
        }
        if (pred(Multigraph::FromPairs(n, pairs))) sum += coins.Weight(mask);
      }
      return sum;
    };
  }
  const double sum = SumOverShadows(edges, options.threads, contribution);
  return {sum / static_cast<double>(shadows), shadows * coins.count()};
}

OracleResult ExactExpectedTriangles(const Hypergraph& h, double p,
                                    const OracleOptions& options) {
  CheckProbability(p);
  OracleResult result;
  if (p == 0.0 || h.n() < 3) {
    result.enumerated_states = 1;
    return result;
  }
  std::array<Vertex, 3> triple{1, 2, 3};
  do {
    EdgeList edges;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto edge = h.edge(e);
      const int inside = Contains(edge, triple[0]) + Contains(edge, triple[1]) +
                         Contains(edge, triple[2]);
      if (inside >= 2) edges.push_back(edge);
    }
    if (edges.size() < 3) continue;  // fewer than three edges: no triangle
    CheckBudget(edges, p, options.budget);
    const CoinPatterns coins(edges.size(), p);
    const std::array<Doubleton, 3> sides{Doubleton{triple[0], triple[1]},
                                         Doubleton{triple[0], triple[2]},
                                         Doubleton{triple[1], triple[2]}};
    const auto contribution = [&](std::span<const Doubleton> chosen) {
      std::array<std::uint64_t, 3> groups{};
      if (coins.collapsed()) {
        for (const Doubleton& side : sides) {
          if (std::find(chosen.begin(), chosen.end(), side) == chosen.end()) {
            return 0.0;
          }
        }
        return 1.0;
      }
      for (std::size_t s = 0; s < 3; ++s) {
        groups[s] = MaskOf(chosen, sides[s]);
        if (groups[s] == 0) return 0.0;
      }
      return GroupsHitWeight(coins, groups);
    };
    const std::uint64_t shadows = ShadowCount(edges);
    result.value += SumOverShadows(edges, options.threads, contribution) /
                    static_cast<double>(shadows);
    result.enumerated_states += shadows * coins.count();
  } while (NextCombination(triple, h.n()));
  return result;
}

OracleDistribution ExactEdgeCountDistribution(const Hypergraph& h, double p,
                                              Vertex i, Vertex j,
                                              const OracleOptions& options) {
  CheckProbability(p);
  CheckPair(h, i, j);
  if (p == 0.0) return {DiscreteDistribution::PointMass(0), 1};
  if (i > j) std::swap(i, j);
  const EdgeList edges = EdgesContaining(h, i, j);
  CheckBudget(edges, p, options.budget);
  const CoinPatterns coins(edges.size(), p);
  const Doubleton target{i, j};
  const std::uint64_t shadows = ShadowCount(edges);
  std::vector<double> pmf(edges.size() + 1, 0.0);
  std::vector<double> scratch(edges.size() + 1);
  // Histogram accumulation is not a scalar sum, so this path walks the
  // shadows directly instead of going through SumOverShadows.
  ForEachShadow(edges, 0, shadows, [&](std::span<const Doubleton> chosen) {
    if (coins.collapsed()) {
      pmf[std::count(chosen.begin(), chosen.end(), target)] += 1.0;
      return;
    }
    const std::uint64_t group = MaskOf(chosen, target);
    const std::uint64_t low_group = group & coins.low_mask();
    const std::uint64_t high_group = group >> coins.low_bits();
    for (std::uint64_t high = 0; high < coins.high_count(); ++high) {
      std::fill(scratch.begin(), scratch.end(), 0.0);
      kernels::PopcountHistogram(low_group, coins.low_weights(), scratch);
      const int shift = std::popcount(high & high_group);
      const double w = coins.HighWeight(high);
      for (std::size_t c = 0; c + shift < pmf.size(); ++c) {
        pmf[c + shift] += w * scratch[c];
      }
    }
  });
  for (double& x : pmf) x /= static_cast<double>(shadows);
  return {DiscreteDistribution(std::move(pmf)), shadows * coins.count()};
}

}  // namespace shadowgraph
