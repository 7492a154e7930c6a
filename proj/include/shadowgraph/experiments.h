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

#ifndef SHADOWGRAPH_EXPERIMENTS_H_
#define SHADOWGRAPH_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadowgraph/combinatorics.h"
#include "shadowgraph/hypergraph.h"
#include "shadowgraph/random.h"

namespace shadowgraph {

enum class ModelKind { kCompleteK, kBinomialHk, kUniformHk, kFile };

// Names: "complete-k", "binomial-hk", "uniform-hk", "file".
std::string_view ModelName(ModelKind model);
ModelKind ParseModel(std::string_view text);

// p = c * scale(n, k) with scale one of 1/n^k, 1/n^(k-1), log(n)/n^2 and
// log(n)/n^(k-1).
enum class ScaleFunction { kInvNk, kInvNk1, kLogN2, kLogNk1 };

// Names: "invnk", "invnk1", "logn2", "lognk1".
std::string_view ScaleName(ScaleFunction scale);
ScaleFunction ParseScale(std::string_view text);
double ScaleValue(ScaleFunction scale, Vertex n, unsigned k);

struct SweepPoint {
  double p = 0.0;
  std::optional<double> c;
};

struct ExperimentConfig {
  ModelKind model = ModelKind::kCompleteK;
  Vertex n = 0;
  unsigned k = 3;
  // Either an explicit list of probabilities or a scale with multipliers.
  std::vector<double> p;
  std::optional<ScaleFunction> scale;
  std::vector<double> c;
  double q = 0.0;
  std::uint64_t m = 0;
  std::string hypergraph_file;
  std::string property = "has-edge";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;

  // Throws InvalidConfig.
  void Validate() const;
  // Sweep points in configuration order. Requires a valid config.
  std::vector<SweepPoint> Sweep() const;

  // Keys: model, n, k, p, q, m, hypergraph_file, property, trials, seed.
  // "p" is a number, a list of numbers, or {"scale": name, "c": [...]}.
  // Unknown keys are rejected. Throws InvalidConfig.
  static ExperimentConfig FromJson(std::string_view text);
};

struct TrialSummary {
  double p = 0.0;
  std::optional<double> c;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double mean_statistic = 0.0;
  double statistic_se = 0.0;
};

// 95% Wilson score interval.
std::pair<double, double> WilsonInterval(std::uint64_t successes,
                                         std::uint64_t trials);

// Summary from integer tallies; the statistic sums are exact so that the
// result does not depend on how trials were split across workers.
TrialSummary Summarize(double p, std::uint64_t successes,
                       std::uint64_t trials, std::uint64_t statistic_sum,
                       unsigned __int128 statistic_square_sum);

// Stream key of a sweep point. Depends only on (n, k, p), so inserting new
// points into a sweep leaves the streams of existing points unchanged.
std::uint64_t PointKey(Vertex n, unsigned k, double p);

// The hypergraph of the configured model; random models draw it from rng.
Hypergraph DrawHypergraph(const ExperimentConfig& cfg, RandomStream& rng);

// Random-hypergraph models are resampled in every trial. Throws
// InvalidConfig.
std::vector<TrialSummary> RunMonteCarlo(const ExperimentConfig& cfg,
                                        unsigned threads = 1);

// Columns: model, n, k, p, property, trials, successes, estimate, ci_low,
// ci_high, mean_statistic, statistic_se.
std::string MonteCarloCsv(const ExperimentConfig& cfg,
                          std::span<const TrialSummary> rows);

struct ScanRow {
  Vertex n = 0;
  unsigned k = 0;
  ScaleFunction scale = ScaleFunction::kInvNk;
  std::string property;
  TrialSummary summary;
};

// Runs the multiplier sweep of `base` at every n; rows ordered by (n, c).
std::vector<ScanRow> ThresholdScan(const ExperimentConfig& base,
                                   std::span<const Vertex> n_values,
                                   unsigned threads = 1);

// Columns: n, k, scale, c, p, property, trials, successes, estimate,
// ci_low, ci_high.
std::string ScanCsv(std::span<const ScanRow> rows);

struct PropertyFrequency {
  std::string property;
  TrialSummary lower;
  TrialSummary upper;
  // Lower-level frequency does not exceed the upper level beyond CI overlap.
  bool ordered = true;
};

struct CouplingReport {
  std::uint64_t trials = 0;
  std::uint64_t contained = 0;
  std::uint64_t identical = 0;
  std::vector<PropertyFrequency> properties;

  bool ok() const {
    if (contained != trials) return false;
    for (const auto& f : properties) {
      if (!f.ordered) return false;
    }
    return true;
  }
};

// Couples the levels p1 <= p2 over the hypergraph model of `cfg`; the
// config's p and property are ignored. Throws InvalidConfig.
CouplingReport CouplingCheck(const ExperimentConfig& cfg, double p1,
                             double p2, unsigned threads = 1);
std::string FormatCouplingReport(const ExperimentConfig& cfg, double p1,
                                 double p2, const CouplingReport& report);

// Fraction of shadows of the complete k-uniform hypergraph on n vertices
// that cover every pair. Throws InvalidParameter unless n >= k >= 3.
TrialSummary ShadowCompletenessEstimate(Vertex n, unsigned k,
                                        std::uint64_t trials,
                                        std::uint64_t seed,
                                        unsigned threads = 1);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_EXPERIMENTS_H_
