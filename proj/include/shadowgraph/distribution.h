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

#ifndef SHADOWGRAPH_DISTRIBUTION_H_
#define SHADOWGRAPH_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace shadowgraph {

// A probability mass function on {0, 1, ..., size() - 1}.
//
// Construction validates that entries lie in [0, 1] and sum to one within
// kSumTolerance; round-off negatives above -1e-15 are clamped to zero.
class DiscreteDistribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit DiscreteDistribution(std::vector<double> pmf);

  static DiscreteDistribution PointMass(std::size_t value);

  std::span<const double> pmf() const { return pmf_; }
  std::size_t size() const { return pmf_.size(); }

  // P(X = j); zero outside the stored range.
  double operator[](std::size_t j) const {
    return j < pmf_.size() ? pmf_[j] : 0.0;
  }

  double Mean() const;
  double Sum() const;

  // Total-variation distance, padding the shorter pmf with zeros.
  double TotalVariation(std::span<const double> other) const;

 private:
  std::vector<double> pmf_;
};

// Number of successes in independent trials with the given probabilities,
// by sequential convolution. Throws InvalidParameter on a probability
// outside [0, 1].
DiscreteDistribution PoissonBinomial(std::span<const double> probs);

// Bin(trials, q).
DiscreteDistribution Binomial(std::uint64_t trials, double q);

// P(Bin(trials, q) >= 1) = 1 - (1 - q)^trials.
double BinomialTailAtLeastOne(std::uint64_t trials, double q);

// Hyp(population, successes, sample): successes in a sample of size `sample`
// drawn without replacement. The pmf has min(successes, sample) + 1
// entries. Throws InvalidParameter unless successes <= population and
// sample <= population.
DiscreteDistribution Hypergeometric(std::uint64_t population,
                                    std::uint64_t successes,
                                    std::uint64_t sample);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_DISTRIBUTION_H_
