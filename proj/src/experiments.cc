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

#include "shadowgraph/experiments.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "shadowgraph/errors.h"
#include "shadowgraph/generator.h"
#include "shadowgraph/multigraph.h"
#include "shadowgraph/predicate.h"

namespace shadowgraph {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

template <typename Tally, typename Body>
Tally ParallelTrials(std::uint64_t trials, unsigned threads,
                     const Body& body) {
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1));
  std::vector<Tally> parts(workers);
  const auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    for (std::uint64_t t = begin; t < end; ++t) body(t, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Tally total{};
  for (const Tally& part : parts) total += part;
  return total;
}

struct PropertyTally {
  std::uint64_t successes = 0;
  std::uint64_t statistic_sum = 0;
  unsigned __int128 statistic_square_sum = 0;

  PropertyTally& operator+=(const PropertyTally& other) {
    successes += other.successes;
    statistic_sum += other.statistic_sum;
    statistic_square_sum += other.statistic_square_sum;
    return *this;
  }
  void Add(bool success, std::uint64_t statistic) {
    successes += success;
    statistic_sum += statistic;
    statistic_square_sum +=
        static_cast<unsigned __int128>(statistic) * statistic;
  }
};

Hypergraph LoadHypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open hypergraph file '" + path + "'");
  try {
    return ReadHypergraph(in);
  } catch (const InvalidParameter& e) {
    throw InvalidConfig(path + ": " + e.what());
  }
}

// The hypergraph layer of a configuration. File hypergraphs are read once.
class HypergraphSource {
 public:
  // The complete hypergraph is only materialized when Draw is needed;
  // Sample works from ranks directly.
  HypergraphSource(const ExperimentConfig& cfg, bool need_draw) : cfg_(cfg) {
    if (cfg.model == ModelKind::kFile) {
      fixed_ = LoadHypergraph(cfg.hypergraph_file);
    } else if (cfg.model == ModelKind::kCompleteK && need_draw) {
      fixed_ = CompleteUniform(cfg.n, cfg.k);
    }
  }

  Vertex n() const {
    return cfg_.model == ModelKind::kFile ? fixed_.n() : cfg_.n;
  }

  Hypergraph Draw(RandomStream& rng) const {
    switch (cfg_.model) {
      case ModelKind::kBinomialHk:
        return BinomialHypergraph(cfg_.n, cfg_.k, cfg_.q, rng);
      case ModelKind::kUniformHk:
        return UniformHypergraph(cfg_.n, cfg_.k, cfg_.m, rng);
      default:
        return fixed_;
    }
  }

  // One draw of G(n, p; H) with H from this source.
  Multigraph Sample(double p, RandomStream& rng) const {
    switch (cfg_.model) {
      case ModelKind::kCompleteK:
        return SampleComplete(cfg_.n, cfg_.k, p, rng);
      case ModelKind::kBinomialHk:
        return SampleBinomialModel(cfg_.n, cfg_.k, p, cfg_.q, rng);
      case ModelKind::kUniformHk:
        return SampleUniformModel(cfg_.n, cfg_.k, cfg_.m, p, rng);
      case ModelKind::kFile:
        break;
    }
    return Generate(fixed_, p, rng);
  }

 private:
  const ExperimentConfig& cfg_;
  Hypergraph fixed_;
};

PropertyPredicate ParseProperty(std::string_view text) {
  try {
    return PropertyPredicate::Parse(text);
  } catch (const InvalidParameter& e) {
    throw InvalidConfig(e.what());
  }
}

std::string FormatOptional(const std::optional<double>& x) {
  return x ? fmt::format("{}", *x) : std::string();
}

}  // namespace

std::string_view ModelName(ModelKind model) {
  switch (model) {
    case ModelKind::kCompleteK:
      return "complete-k";
    case ModelKind::kBinomialHk:
      return "binomial-hk";
    case ModelKind::kUniformHk:
      return "uniform-hk";
    case ModelKind::kFile:
      return "file";
  }
  return "";
}

ModelKind ParseModel(std::string_view text) {
  for (ModelKind m : {ModelKind::kCompleteK, ModelKind::kBinomialHk,
                      ModelKind::kUniformHk, ModelKind::kFile}) {
    if (ModelName(m) == text) return m;
  }
  throw InvalidConfig("unknown model '" + std::string(text) + "'");
}

std::string_view ScaleName(ScaleFunction scale) {
  switch (scale) {
    case ScaleFunction::kInvNk:
      return "invnk";
    case ScaleFunction::kInvNk1:
      return "invnk1";
    case ScaleFunction::kLogN2:
      return "logn2";
    case ScaleFunction::kLogNk1:
      return "lognk1";
  }
  return "";
}

ScaleFunction ParseScale(std::string_view text) {
  for (ScaleFunction s : {ScaleFunction::kInvNk, ScaleFunction::kInvNk1,
                          ScaleFunction::kLogN2, ScaleFunction::kLogNk1}) {
    if (ScaleName(s) == text) return s;
  }
  throw InvalidConfig("unknown scale '" + std::string(text) + "'");
}

double ScaleValue(ScaleFunction scale, Vertex n, unsigned k) {
  const double x = static_cast<double>(n);
  switch (scale) {
    case ScaleFunction::kInvNk:
      return std::pow(x, -static_cast<double>(k));
    case ScaleFunction::kInvNk1:
      return std::pow(x, 1.0 - static_cast<double>(k));
    case ScaleFunction::kLogN2:
      return std::log(x) / (x * x);
    case ScaleFunction::kLogNk1:
      return std::log(x) * std::pow(x, 1.0 - static_cast<double>(k));
  }
  return 0.0;
}

void ExperimentConfig::Validate() const {
  if (k < 2) throw InvalidConfig("k must be at least 2");
  if (model == ModelKind::kFile) {
    if (hypergraph_file.empty()) {
      throw InvalidConfig("model 'file' requires hypergraph_file");
    }
  } else {
    if (n < k) throw InvalidConfig("n must be at least k");
    if (model == ModelKind::kBinomialHk && !(q >= 0.0 && q <= 1.0)) {
      throw InvalidConfig("q must lie in [0, 1]");
    }
    if (model == ModelKind::kUniformHk) {
      std::uint64_t total = 0;
      try {
        total = Choose(n, k);
      } catch (const std::overflow_error&) {
        total = UINT64_MAX;
      }
      if (m > total) throw InvalidConfig("m exceeds C(n, k)");
    }
  }
  if (trials < 1) throw InvalidConfig("trials must be positive");
  const PropertyPredicate pred = ParseProperty(property);
  if (pred.kind() == PropertyPredicate::Kind::kPairAdjacent &&
      model != ModelKind::kFile && pred.j() > n) {
    throw InvalidConfig("pair-adjacent vertex exceeds n");
  }
  if (scale.has_value() == !p.empty()) {
    throw InvalidConfig("give either a list of p values or a scale with c");
  }
  if (scale) {
    if (c.empty()) throw InvalidConfig("scale sweep needs at least one c");
    if (std::set<double>(c.begin(), c.end()).size() != c.size()) {
      throw InvalidConfig("c values must be distinct");
    }
    for (const double x : c) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw InvalidConfig("c values must be finite and non-negative");
      }
    }
    if (model != ModelKind::kFile) {
      for (const SweepPoint& point : Sweep()) {
        if (point.p > 1.0) {
          throw InvalidConfig(fmt::format("c = {} gives p = {} > 1 at n = {}",
                                          *point.c, point.p, n));
        }
      }
    }
  } else {
    if (std::set<double>(p.begin(), p.end()).size() != p.size()) {
      throw InvalidConfig("p values must be distinct");
    }
    for (const double x : p) {
      if (!(x >= 0.0 && x <= 1.0)) throw InvalidConfig("p must lie in [0, 1]");
    }
  }
}

std::vector<SweepPoint> ExperimentConfig::Sweep() const {
  std::vector<SweepPoint> points;
  if (scale) {
    const double unit = ScaleValue(*scale, n, k);
    for (const double x : c) points.push_back({x * unit, x});
  } else {
    for (const double x : p) points.push_back({x, std::nullopt});
  }
  return points;
}

ExperimentConfig ExperimentConfig::FromJson(std::string_view text) {
  using nlohmann::json;
  static const std::set<std::string> kKeys = {
      "model",    "n",     "k",    "p",    "q",
      "m",        "hypergraph_file", "property", "trials", "seed"};
  ExperimentConfig cfg;
  try {
    const json doc = json::parse(text);
    if (!doc.is_object()) throw InvalidConfig("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (!kKeys.contains(key)) {
        throw InvalidConfig("unknown config key '" + key + "'");
      }
    }
    const auto integer = [&](const char* key) -> std::uint64_t {
      const json& v = doc.at(key);
      if (!v.is_number_unsigned()) {
        throw InvalidConfig(std::string(key) +
                            " must be a non-negative integer");
      }
      return v.get<std::uint64_t>();
    };
    const auto number = [](const json& v, const std::string& what) {
      if (!v.is_number()) throw InvalidConfig(what + " must be a number");
      return v.get<double>();
    };
    if (doc.contains("model")) {
      cfg.model = ParseModel(doc.at("model").get<std::string>());
    }
    if (doc.contains("n")) cfg.n = static_cast<Vertex>(integer("n"));
    if (doc.contains("k")) cfg.k = static_cast<unsigned>(integer("k"));
    if (doc.contains("q")) cfg.q = number(doc.at("q"), "q");
    if (doc.contains("m")) cfg.m = integer("m");
    if (doc.contains("trials")) cfg.trials = integer("trials");
    if (doc.contains("seed")) cfg.seed = integer("seed");
    if (doc.contains("hypergraph_file")) {
      cfg.hypergraph_file = doc.at("hypergraph_file").get<std::string>();
    }
    if (doc.contains("property")) {
      cfg.property = doc.at("property").get<std::string>();
    }
    if (!doc.contains("p")) throw InvalidConfig("missing key 'p'");
    const json& p = doc.at("p");
    if (p.is_number()) {
      cfg.p = {p.get<double>()};
    } else if (p.is_array()) {
      for (const json& x : p) cfg.p.push_back(number(x, "p entry"));
    } else if (p.is_object()) {
      for (const auto& [key, value] : p.items()) {
        if (key != "scale" && key != "c") {
          throw InvalidConfig("unknown sweep key '" + key + "'");
        }
      }
      cfg.scale = ParseScale(p.at("scale").get<std::string>());
      const json& c = p.at("c");
      if (c.is_array()) {
        for (const json& x : c) cfg.c.push_back(number(x, "c entry"));
      } else {
        cfg.c = {number(c, "c")};
      }
    } else {
      throw InvalidConfig("p must be a number, a list or a scale sweep");
    }
  } catch (const json::exception& e) {
    throw InvalidConfig(std::string("malformed config: ") + e.what());
  }
  cfg.Validate();
  return cfg;
}

std::pair<double, double> WilsonInterval(std::uint64_t successes,
                                         std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      kWilsonZ * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) /
      denom;
  double low = std::max(0.0, center - half);
  double high = std::min(1.0, center + half);
  if (successes == 0) low = 0.0;
  if (successes == trials) high = 1.0;
  return {std::min(low, phat), std::max(high, phat)};
}

TrialSummary Summarize(double p, std::uint64_t successes,
                       std::uint64_t trials, std::uint64_t statistic_sum,
                       unsigned __int128 statistic_square_sum) {
  TrialSummary s;
  s.p = p;
  s.successes = successes;
  s.trials = trials;
  const double n = static_cast<double>(trials);
  s.estimate = trials ? static_cast<double>(successes) / n : 0.0;
  std::tie(s.ci_low, s.ci_high) = WilsonInterval(successes, trials);
  if (trials > 0) {
    s.mean_statistic = static_cast<double>(statistic_sum) / n;
  }
  if (trials > 1) {
    const double sum = static_cast<double>(statistic_sum);
    const double squares = static_cast<double>(statistic_square_sum);
    const double variance =
        std::max(0.0, (squares - sum * sum / n) / (n - 1.0));
    s.statistic_se = std::sqrt(variance / n);
  }
  return s;
}

std::uint64_t PointKey(Vertex n, unsigned k, double p) {
  std::uint64_t key = Mix64(n);
  key = Mix64(key ^ k);
  return Mix64(key ^ std::bit_cast<std::uint64_t>(p));
}

Hypergraph DrawHypergraph(const ExperimentConfig& cfg, RandomStream& rng) {
  return HypergraphSource(cfg, true).Draw(rng);
}

std::vector<TrialSummary> RunMonteCarlo(const ExperimentConfig& cfg,
                                        unsigned threads) {
  cfg.Validate();
  const HypergraphSource source(cfg, false);
  ExperimentConfig resolved = cfg;
  resolved.n = source.n();
  const PropertyPredicate pred = ParseProperty(cfg.property);
  if (pred.kind() == PropertyPredicate::Kind::kPairAdjacent &&
      pred.j() > resolved.n) {
    throw InvalidConfig("pair-adjacent vertex exceeds n");
  }
  std::vector<TrialSummary> out;
  for (const SweepPoint& point : resolved.Sweep()) {
    if (point.p > 1.0) throw InvalidConfig("p exceeds 1");
    const std::uint64_t key = PointKey(resolved.n, cfg.k, point.p);
    const auto tally = ParallelTrials<PropertyTally>(
        cfg.trials, threads, [&](std::uint64_t t, PropertyTally& acc) {
          RandomStream rng = RandomStream::ForTrial(cfg.seed, key, t);
          const Multigraph g = source.Sample(point.p, rng);
          acc.Add(pred(g), pred.Statistic(g));
        });
    TrialSummary s = Summarize(point.p, tally.successes, cfg.trials,
                               tally.statistic_sum, tally.statistic_square_sum);
    s.c = point.c;
    out.push_back(s);
  }
  return out;
}

std::string MonteCarloCsv(const ExperimentConfig& cfg,
                          std::span<const TrialSummary> rows) {
  std::string out =
      "model,n,k,c,p,property,trials,successes,estimate,ci_low,ci_high,"
      "mean_statistic,statistic_se\n";
  for (const TrialSummary& s : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                       ModelName(cfg.model), cfg.n, cfg.k, FormatOptional(s.c),
                       s.p, cfg.property, s.trials, s.successes, s.estimate,
                       s.ci_low, s.ci_high, s.mean_statistic, s.statistic_se);
  }
  return out;
}

std::vector<ScanRow> ThresholdScan(const ExperimentConfig& base,
                                   std::span<const Vertex> n_values,
                                   unsigned threads) {
  if (!base.scale) throw InvalidConfig("threshold scan needs a scale sweep");
  if (n_values.empty()) throw InvalidConfig("threshold scan needs n values");
  if (base.model == ModelKind::kFile) {
    throw InvalidConfig("threshold scan needs an implicit model");
  }
  std::vector<ScanRow> rows;
  for (const Vertex n : n_values) {
    ExperimentConfig cfg = base;
    cfg.n = n;
    for (const TrialSummary& s : RunMonteCarlo(cfg, threads)) {
      rows.push_back({n, cfg.k, *cfg.scale, cfg.property, s});
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScanRow& a, const ScanRow& b) {
                     return std::pair(a.n, *a.summary.c) <
                            std::pair(b.n, *b.summary.c);
                   });
  return rows;
}

std::string ScanCsv(std::span<const ScanRow> rows) {
  std::string out =
      "n,k,scale,c,p,property,trials,successes,estimate,ci_low,ci_high\n";
  for (const ScanRow& r : rows) {
    const TrialSummary& s = r.summary;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", r.n, r.k,
                       ScaleName(r.scale), FormatOptional(s.c), s.p,
                       r.property, s.trials, s.successes, s.estimate,
                       s.ci_low, s.ci_high);
  }
  return out;
}

CouplingReport CouplingCheck(const ExperimentConfig& cfg, double p1,
                             double p2, unsigned threads) {
  if (!(p1 >= 0.0 && p1 <= p2 && p2 <= 1.0)) {
    throw InvalidConfig("coupling needs 0 <= p1 <= p2 <= 1");
  }
  ExperimentConfig probe = cfg;
  probe.p = {p1};
  probe.scale.reset();
  probe.Validate();
  const HypergraphSource source(cfg, true);
  const std::vector<PropertyPredicate> preds = {
      PropertyPredicate::HasEdge(), PropertyPredicate::HasTriangle(),
      PropertyPredicate::NoIsolated(), PropertyPredicate::Connected(),
      PropertyPredicate::Simple()};

  struct Tally {
    std::uint64_t contained = 0;
    std::uint64_t identical = 0;
    std::vector<std::uint64_t> lower = std::vector<std::uint64_t>(5, 0);
    std::vector<std::uint64_t> upper = std::vector<std::uint64_t>(5, 0);
    Tally& operator+=(const Tally& o) {
      contained += o.contained;
      identical += o.identical;
      for (std::size_t i = 0; i < lower.size(); ++i) {
        lower[i] += o.lower[i];
        upper[i] += o.upper[i];
      }
      return *this;
    }
  };
  const std::uint64_t key =
      Mix64(PointKey(source.n(), cfg.k, p1) ^ Mix64(std::bit_cast<std::uint64_t>(p2)));
  const Tally tally = ParallelTrials<Tally>(
      cfg.trials, threads, [&](std::uint64_t t, Tally& acc) {
        RandomStream rng = RandomStream::ForTrial(cfg.seed, key, t);
        const Hypergraph h = source.Draw(rng);
        const CoupledGraphs g = CoupledGenerate(h, p1, p2, rng);
        acc.contained += IsSubgraph(g.lower, g.upper);
        acc.identical += g.lower == g.upper;
        for (std::size_t i = 0; i < preds.size(); ++i) {
          acc.lower[i] += preds[i](g.lower);
          acc.upper[i] += preds[i](g.upper);
        }
      });

  CouplingReport report;
  report.trials = cfg.trials;
  report.contained = tally.contained;
  report.identical = tally.identical;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    PropertyFrequency f;
    f.property = preds[i].Name();
    f.lower = Summarize(p1, tally.lower[i], cfg.trials, 0, 0);
    f.upper = Summarize(p2, tally.upper[i], cfg.trials, 0, 0);
    if (preds[i].IsMonotoneIncreasing()) {
      f.ordered = f.lower.ci_low <= f.upper.ci_high;
    } else {
      f.ordered = f.upper.ci_low <= f.lower.ci_high;
    }
    report.properties.push_back(f);
  }
  return report;
}

std::string FormatCouplingReport(const ExperimentConfig& cfg, double p1,
                                 double p2, const CouplingReport& report) {
  std::string out = fmt::format(
      "coupling check: model={} n={} k={} p1={} p2={} trials={} seed={}\n",
      ModelName(cfg.model), cfg.n, cfg.k, p1, p2, report.trials, cfg.seed);
  out += fmt::format("containment: {}/{}\n", report.contained, report.trials);
  out += fmt::format("identical: {}/{}\n", report.identical, report.trials);
  out += fmt::format("{:<16}{:>12}{:>12}{:>26}{:>26}  {}\n", "property",
                     "lower", "upper", "lower_ci", "upper_ci", "ordered");
  for (const PropertyFrequency& f : report.properties) {
    out += fmt::format(
        "{:<16}{:>12.6f}{:>12.6f}{:>26}{:>26}  {}\n", f.property,
        f.lower.estimate, f.upper.estimate,
        fmt::format("[{:.6f}, {:.6f}]", f.lower.ci_low, f.lower.ci_high),
        fmt::format("[{:.6f}, {:.6f}]", f.upper.ci_low, f.upper.ci_high),
        f.ordered ? "yes" : "NO");
  }
  out += report.ok() ? "result: ok\n" : "result: FAILED\n";
  return out;
}

TrialSummary ShadowCompletenessEstimate(Vertex n, unsigned k,
                                        std::uint64_t trials,
                                        std::uint64_t seed,
                                        unsigned threads) {
  if (k < 3 || n < k) throw InvalidParameter("requires n >= k >= 3");
  if (trials < 1) throw InvalidParameter("trials must be positive");
  const Hypergraph h = CompleteUniform(n, k);
  const std::uint64_t key = PointKey(n, k, 0.0);
  const auto tally = ParallelTrials<PropertyTally>(
      trials, threads, [&](std::uint64_t t, PropertyTally& acc) {
        RandomStream rng = RandomStream::ForTrial(seed, key, t);
        const ShadowSelection shadow = SampleShadow(h, rng);
        std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
        std::uint64_t distinct = 0;
        for (const Doubleton& d : shadow.doubletons) {
          const std::size_t cell =
              static_cast<std::size_t>(d.u - 1) * n + (d.v - 1);
          if (!covered[cell]) {
            covered[cell] = true;
            ++distinct;
          }
        }
        acc.Add(distinct == Choose(n, 2), distinct);
      });
  return Summarize(0.0, tally.successes, trials, tally.statistic_sum,
                   tally.statistic_square_sum);
}

}  // namespace shadowgraph
