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

#include "shadowgraph/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "shadowgraph/errors.h"
#include "shadowgraph/kernels.h"

namespace shadowgraph {

namespace {

void CheckProbability(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw InvalidParameter("probability " + std::to_string(q) +
                           " outside [0, 1]");
  }
}

// Scales an unnormalised pmf built from exact term ratios.
std::vector<double> Normalised(std::vector<double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return weights;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> pmf)
    : pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw InvalidParameter("empty pmf");
  for (double& x : pmf_) {
    if (x < 0.0 && x > -1e-15) x = 0.0;
    if (!(x >= 0.0 && x <= 1.0 + 1e-15)) {
      throw InvalidParameter("pmf entry " + std::to_string(x) +
                             " outside [0, 1]");
    }
  }
  if (std::fabs(Sum() - 1.0) > kSumTolerance) {
    throw InvalidParameter("pmf sums to " + std::to_string(Sum()));
  }
}

DiscreteDistribution DiscreteDistribution::PointMass(std::size_t value) {
  std::vector<double> pmf(value + 1, 0.0);
  pmf[value] = 1.0;
  return DiscreteDistribution(std::move(pmf));
}

double DiscreteDistribution::Mean() const {
  double mean = 0.0;
  for (std::size_t j = 0; j < pmf_.size(); ++j) mean += j * pmf_[j];
  return mean;
}

double DiscreteDistribution::Sum() const {
  return std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
}

double DiscreteDistribution::TotalVariation(
    std::span<const double> other) const {
  const std::size_t size = std::max(pmf_.size(), other.size());
  std::vector<double> a(size, 0.0);
  std::vector<double> b(size, 0.0);
  std::copy(pmf_.begin(), pmf_.end(), a.begin());
  std::copy(other.begin(), other.end(), b.begin());
  return kernels::HalfL1Distance(a, b);
}

DiscreteDistribution PoissonBinomial(std::span<const double> probs) {
  for (const double q : probs) CheckProbability(q);
  std::vector<double> current{1.0};
  std::vector<double> next;
  current.reserve(probs.size() + 1);
  next.reserve(probs.size() + 1);
  for (const double q : probs) {
    next.resize(current.size() + 1);
    kernels::BernoulliConvolve(current, q, next);
    current.swap(next);
  }
  return DiscreteDistribution(std::move(current));
}

DiscreteDistribution Binomial(std::uint64_t trials, double q) {
  CheckProbability(q);
  if (q == 0.0) return DiscreteDistribution::PointMass(0);
  if (q == 1.0) return DiscreteDistribution::PointMass(trials);
  std::vector<double> pmf(trials + 1, 0.0);
  const auto mode = std::min<std::uint64_t>(
      trials, static_cast<std::uint64_t>((trials + 1) * q));
  const double odds = q / (1.0 - q);
  pmf[mode] = 1.0;
  for (std::uint64_t j = mode; j < trials; ++j) {
    pmf[j + 1] = pmf[j] * static_cast<double>(trials - j) /
                 static_cast<double>(j + 1) * odds;
  }
  for (std::uint64_t j = mode; j > 0; --j) {
    pmf[j - 1] = pmf[j] * static_cast<double>(j) /
                 static_cast<double>(trials - j + 1) / odds;
  }
  return DiscreteDistribution(Normalised(std::move(pmf)));
}

double BinomialTailAtLeastOne(std::uint64_t trials, double q) {
  CheckProbability(q);
  if (trials == 0 || q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(trials) * std::log1p(-q));
}

DiscreteDistribution Hypergeometric(std::uint64_t population,
                                    std::uint64_t successes,
                                    std::uint64_t sample) {
  if (successes > population || sample > population) {
    throw InvalidParameter("hypergeometric needs successes <= population and "
                           "sample <= population");
  }
  const std::uint64_t failures = population - successes;
  const std::uint64_t hi = std::min(successes, sample);
  const std::uint64_t lo = sample > failures ? sample - failures : 0;
  std::vector<double> pmf(hi + 1, 0.0);
  // Start at the mode and walk outwards with exact term ratios
  // P(j+1)/P(j) = (M-j)(a-j) / ((j+1)(N-M-a+j+1)).
  auto mode = static_cast<std::uint64_t>(
      (static_cast<double>(sample) + 1) * (static_cast<double>(successes) + 1) /
      (static_cast<double>(population) + 2));
  mode = std::clamp(mode, lo, hi);
  pmf[mode] = 1.0;
  const auto ratio_up = [&](std::uint64_t j) {
    return static_cast<double>(successes - j) *
           static_cast<double>(sample - j) /
           (static_cast<double>(j + 1) *
            (static_cast<double>(failures + j + 1) -
             static_cast<double>(sample)));
  };
  for (std::uint64_t j = mode; j < hi; ++j) pmf[j + 1] = pmf[j] * ratio_up(j);
  for (std::uint64_t j = mode; j > lo; --j) {
    pmf[j - 1] = pmf[j] / ratio_up(j - 1);
  }
  return DiscreteDistribution(Normalised(std::move(pmf)));
}

}  // namespace shadowgraph
