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

// Command-line front end: generate, exact, oracle, mc, scan and couple.
//
// Exit codes: 0 success, 1 assertion failure, 2 invalid configuration,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadowgraph/analytics.h"
#include "shadowgraph/combinatorics.h"
#include "shadowgraph/errors.h"
#include "shadowgraph/experiments.h"
#include "shadowgraph/generator.h"
#include "shadowgraph/hypergraph.h"
#include "shadowgraph/multigraph.h"
#include "shadowgraph/oracle.h"
#include "shadowgraph/predicate.h"

namespace sg = shadowgraph;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitBudget = 3;

struct ModelFlags {
  std::string model = "complete-k";
  std::uint32_t n = 0;
  unsigned k = 3;
  double q = 0.0;
  std::uint64_t m = 0;
  std::string hypergraph_file;

  void Register(CLI::App* app) {
    app->add_option("--model", model,
                    "complete-k, binomial-hk, uniform-hk or file");
    app->add_option("--n", n, "Number of vertices");
    app->add_option("--k", k, "Hyperedge size");
    app->add_option("--q", q, "Inclusion probability for binomial-hk");
    app->add_option("--m", m, "Number of hyperedges for uniform-hk");
    app->add_option("--hypergraph-file", hypergraph_file,
                    "Hypergraph for model 'file'");
  }

  sg::ExperimentConfig Config() const {
    sg::ExperimentConfig cfg;
    cfg.model = sg::ParseModel(model);
    cfg.n = n;
    cfg.k = k;
    cfg.q = q;
    cfg.m = m;
    cfg.hypergraph_file = hypergraph_file;
    return cfg;
  }
};

void Emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw sg::InvalidConfig("cannot write '" + out_path + "'");
  out << text;
}

std::string Decimal(double x) { return fmt::format("{:.12g}", x); }

std::string RenderValue(const std::string& quantity, const json& params,
                        const json& value, bool as_json,
                        const json& extra = json::object()) {
  if (as_json) {
    json doc;
    doc["quantity"] = quantity;
    doc["params"] = params;
    doc["value"] = value;
    for (const auto& [key, v] : extra.items()) doc[key] = v;
    return doc.dump() + "\n";
  }
  std::string out;
  if (value.is_array()) {
    for (std::size_t j = 0; j < value.size(); ++j) {
      out += fmt::format("{} {}\n", j, Decimal(value[j].get<double>()));
    }
  } else {
    out = Decimal(value.get<double>()) + "\n";
  }
  for (const auto& [key, v] : extra.items()) {
    out += fmt::format("{}={}\n", key, v.dump());
  }
  return out;
}

json PmfJson(const sg::DiscreteDistribution& d) {
  json values = json::array();
  for (const double x : d.pmf()) values.push_back(x);
  return values;
}

sg::Hypergraph FixedHypergraph(const ModelFlags& flags, std::uint64_t seed) {
  sg::ExperimentConfig cfg = flags.Config();
  cfg.p = {0.0};
  cfg.Validate();
  sg::RandomStream rng = sg::RandomStream::ForTrial(seed, 0, 0);
  return sg::DrawHypergraph(cfg, rng);
}

json ModelParams(const ModelFlags& flags) {
  json params;
  params["model"] = flags.model;
  if (flags.model == "file") {
    params["hypergraph_file"] = flags.hypergraph_file;
  } else {
    params["n"] = flags.n;
    params["k"] = flags.k;
  }
  if (flags.model == "binomial-hk") params["q"] = flags.q;
  if (flags.model == "uniform-hk") params["m"] = flags.m;
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random multigraphs from hypergraph shadows"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Sample one multigraph");
  ModelFlags gen_model;
  gen_model.Register(generate);
  double gen_p = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  generate->add_option("--p", gen_p, "Edge probability")->required();
  generate->add_option("--seed", gen_seed, "Master seed");
  generate->add_option("--out", gen_out, "Output file");

  // exact
  auto* exact = app.add_subcommand("exact", "Closed-form quantities");
  ModelFlags exact_model;
  exact_model.Register(exact);
  std::string exact_quantity;
  double exact_p = 0.0;
  std::uint32_t exact_vertex = 1;
  std::uint32_t exact_i = 1;
  std::uint32_t exact_j = 2;
  std::string exact_param = "exact";
  bool exact_json = false;
  exact
      ->add_option("--quantity", exact_quantity,
                   "degree-law, pair-law, expected-isolated, empty-prob, "
                   "triangles-b3, triangles-u3, triangles-c4 or chain-row")
      ->required();
  exact->add_option("--p", exact_p, "Edge probability")->required();
  exact->add_option("--vertex", exact_vertex, "Vertex for degree-law");
  exact->add_option("--i", exact_i, "First vertex for pair-law");
  exact->add_option("--j", exact_j, "Second vertex for pair-law");
  exact->add_option("--param", exact_param,
                    "triangles-u3 form: exact, statement or proof");
  exact->add_flag("--json", exact_json, "Emit JSON");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration");
  ModelFlags oracle_model;
  oracle_model.Register(oracle);
  std::string oracle_quantity;
  std::string oracle_predicate = "has-edge";
  double oracle_p = 0.0;
  double oracle_budget = 1e9;
  unsigned oracle_threads = 1;
  std::uint32_t oracle_i = 1;
  std::uint32_t oracle_j = 2;
  std::uint64_t oracle_seed = 0;
  bool oracle_json = false;
  oracle->add_option("--quantity", oracle_quantity,
                     "prob, triangles or pair-dist")
      ->required();
  oracle->add_option("--predicate", oracle_predicate, "Property for prob");
  oracle->add_option("--p", oracle_p, "Edge probability")->required();
  oracle->add_option("--budget", oracle_budget, "Maximum enumerated states");
  oracle->add_option("--threads", oracle_threads, "Worker threads");
  oracle->add_option("--i", oracle_i, "First vertex for pair-dist");
  oracle->add_option("--j", oracle_j, "Second vertex for pair-dist");
  oracle->add_option("--seed", oracle_seed, "Seed for random hypergraphs");
  oracle->add_flag("--json", oracle_json, "Emit JSON");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates");
  ModelFlags mc_model;
  mc_model.Register(mc);
  std::string mc_config;
  std::vector<double> mc_p;
  std::string mc_scale;
  std::vector<double> mc_c;
  std::string mc_property = "has-edge";
  std::uint64_t mc_trials = 10000;
  std::uint64_t mc_seed = 0;
  unsigned mc_threads = 1;
  std::string mc_out;
  mc->add_option("--config", mc_config, "JSON experiment config");
  mc->add_option("--p", mc_p, "Edge probabilities")->delimiter(',');
  mc->add_option("--scale", mc_scale, "invnk, invnk1, logn2 or lognk1");
  mc->add_option("--c-list", mc_c, "Scale multipliers")->delimiter(',');
  mc->add_option("--property", mc_property, "Property predicate");
  mc->add_option("--trials", mc_trials, "Trials per point");
  mc->add_option("--seed", mc_seed, "Master seed");
  mc->add_option("--threads", mc_threads, "Worker threads");
  mc->add_option("--out", mc_out, "Output file");

  // scan
  auto* scan = app.add_subcommand("scan", "Threshold scan over n and c");
  ModelFlags scan_model;
  scan_model.Register(scan);
  std::string scan_property;
  std::string scan_scale;
  std::vector<double> scan_c;
  std::vector<std::uint32_t> scan_n;
  std::uint64_t scan_trials = 10000;
  std::uint64_t scan_seed = 0;
  unsigned scan_threads = 1;
  std::string scan_out;
  scan->add_option("--property", scan_property,
                   "simple, connected, no-isolated or has-edge")
      ->required();
  scan->add_option("--scale", scan_scale, "invnk, invnk1, logn2 or lognk1")
      ->required();
  scan->add_option("--c-list", scan_c, "Scale multipliers")
      ->delimiter(',')
      ->required();
  scan->add_option("--n-list", scan_n, "Vertex counts")
      ->delimiter(',')
      ->required();
  scan->add_option("--trials", scan_trials, "Trials per point");
  scan->add_option("--seed", scan_seed, "Master seed");
  scan->add_option("--threads", scan_threads, "Worker threads");
  scan->add_option("--out", scan_out, "Output file");

  // couple
  auto* couple = app.add_subcommand("couple", "Coupling containment check");
  ModelFlags couple_model;
  couple_model.Register(couple);
  double couple_p1 = 0.0;
  double couple_p2 = 0.0;
  std::uint64_t couple_trials = 10000;
  std::uint64_t couple_seed = 0;
  unsigned couple_threads = 1;
  couple->add_option("--p1", couple_p1, "Lower probability")->required();
  couple->add_option("--p2", couple_p2, "Upper probability")->required();
  couple->add_option("--trials", couple_trials, "Trials");
  couple->add_option("--seed", couple_seed, "Master seed");
  couple->add_option("--threads", couple_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidConfig;
  }

  try {
    if (*generate) {
      sg::ExperimentConfig cfg = gen_model.Config();
      cfg.p = {gen_p};
      cfg.seed = gen_seed;
      cfg.Validate();
      sg::RandomStream rng = sg::RandomStream::ForTrial(
          gen_seed, sg::PointKey(cfg.n, cfg.k, gen_p), 0);
      const sg::Hypergraph h = sg::DrawHypergraph(cfg, rng);
      std::ostringstream out;
      sg::WriteMultigraph(out, sg::Generate(h, gen_p, rng));
      Emit(out.str(), gen_out);
      return 0;
    }

    if (*exact) {
      const std::string& q = exact_quantity;
      const auto& f = exact_model;
      json params;
      params["p"] = exact_p;
      json value;
      if (q == "degree-law") {
        params.update(ModelParams(f));
        params["vertex"] = exact_vertex;
        if (f.model == "binomial-hk") {
          value = PmfJson(sg::DegreeLawBinomialModel(f.n, f.k, exact_p, f.q));
        } else if (f.model == "uniform-hk") {
          value = PmfJson(sg::DegreeLawUniformModel(f.n, f.k, exact_p, f.m));
        } else {
          const sg::Hypergraph h = FixedHypergraph(f, 0);
          value = PmfJson(sg::DegreeLaw(h, exact_vertex, exact_p));
        }
      } else if (q == "pair-law") {
        if (f.model != "complete-k" && f.model != "file") {
          throw sg::InvalidConfig("pair-law needs model complete-k or file");
        }
        params.update(ModelParams(f));
        params["i"] = exact_i;
        params["j"] = exact_j;
        const sg::Hypergraph h = FixedHypergraph(f, 0);
        value = PmfJson(sg::PairEdgeLaw(h, exact_i, exact_j, exact_p));
      } else if (q == "expected-isolated") {
        params["n"] = f.n;
        params["k"] = f.k;
        value = sg::ExpectedIsolated(f.n, f.k, exact_p);
      } else if (q == "empty-prob") {
        params.update(ModelParams(f));
        if (f.model == "file") {
          const sg::Hypergraph h = FixedHypergraph(f, 0);
          value = sg::EmptyProbability(h.num_edges(), exact_p);
        } else if (f.model == "uniform-hk") {
          value = sg::EmptyProbability(f.m, exact_p);
        } else if (f.model == "binomial-hk") {
          value = sg::EmptyProbability(sg::Choose(f.n, f.k), exact_p * f.q);
        } else {
          value = sg::EmptyProbability(sg::Choose(f.n, f.k), exact_p);
        }
      } else if (q == "triangles-b3") {
        params["n"] = f.n;
        params["q"] = f.q;
        value = sg::ExpectedTrianglesBinomial3(f.n, exact_p, f.q);
      } else if (q == "triangles-u3") {
        params["n"] = f.n;
        params["m"] = f.m;
        params["param"] = exact_param;
        if (exact_param == "exact") {
          value = sg::ExpectedTrianglesUniform3(f.n, exact_p, f.m);
        } else if (exact_param == "statement") {
          value = sg::ExpectedTrianglesUniform3Product(
              f.n, exact_p, f.m,
              sg::HypergeometricProduct::Statement(f.n, exact_p, f.m));
        } else if (exact_param == "proof") {
          value = sg::ExpectedTrianglesUniform3Product(
              f.n, exact_p, f.m,
              sg::HypergeometricProduct::Proof(f.n, exact_p, f.m));
        } else {
          throw sg::InvalidConfig("unknown --param '" + exact_param + "'");
        }
      } else if (q == "triangles-c4") {
        params["n"] = f.n;
        value = sg::ExpectedTrianglesComplete4(f.n, exact_p);
      } else if (q == "chain-row") {
        params["n"] = f.n;
        value = json::array();
        for (const double x : sg::TriangleChainRow(f.n, exact_p)) {
          value.push_back(x);
        }
      } else {
        throw sg::InvalidConfig("unknown quantity '" + q + "'");
      }
      std::cout << RenderValue(q, params, value, exact_json);
      return 0;
    }

    if (*oracle) {
      const sg::Hypergraph h = FixedHypergraph(oracle_model, oracle_seed);
      const sg::OracleOptions options{oracle_budget, oracle_threads};
      json params = ModelParams(oracle_model);
      params["p"] = oracle_p;
      params["budget"] = oracle_budget;
      json value;
      std::uint64_t states = 0;
      if (oracle_quantity == "prob") {
        sg::PropertyPredicate pred =
            sg::PropertyPredicate::Parse(oracle_predicate);
        params["predicate"] = pred.Name();
        const auto r = sg::ExactPropertyProbability(h, oracle_p, pred, options);
        value = r.value;
        states = r.enumerated_states;
      } else if (oracle_quantity == "triangles") {
        const auto r = sg::ExactExpectedTriangles(h, oracle_p, options);
        value = r.value;
        states = r.enumerated_states;
      } else if (oracle_quantity == "pair-dist") {
        params["i"] = oracle_i;
        params["j"] = oracle_j;
        const auto r = sg::ExactEdgeCountDistribution(h, oracle_p, oracle_i,
                                                      oracle_j, options);
        value = PmfJson(r.distribution);
        states = r.enumerated_states;
      } else {
        throw sg::InvalidConfig("unknown quantity '" + oracle_quantity + "'");
      }
      json extra;
      extra["enumerated_states"] = states;
      std::cout << RenderValue(oracle_quantity, params, value, oracle_json,
                               extra);
      return 0;
    }

    if (*mc) {
      sg::ExperimentConfig cfg;
      if (!mc_config.empty()) {
        std::ifstream in(mc_config);
        if (!in) throw sg::InvalidConfig("cannot open '" + mc_config + "'");
        const std::string text((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        cfg = sg::ExperimentConfig::FromJson(text);
      } else {
        cfg = mc_model.Config();
        cfg.p = mc_p;
        if (!mc_scale.empty()) cfg.scale = sg::ParseScale(mc_scale);
        cfg.c = mc_c;
        cfg.property = mc_property;
        cfg.trials = mc_trials;
        cfg.seed = mc_seed;
      }
      const auto rows = sg::RunMonteCarlo(cfg, mc_threads);
      Emit(sg::MonteCarloCsv(cfg, rows), mc_out);
      return 0;
    }

    if (*scan) {
      sg::ExperimentConfig cfg = scan_model.Config();
      cfg.scale = sg::ParseScale(scan_scale);
      cfg.c = scan_c;
      cfg.property = scan_property;
      cfg.trials = scan_trials;
      cfg.seed = scan_seed;
      const auto rows = sg::ThresholdScan(cfg, scan_n, scan_threads);
      Emit(sg::ScanCsv(rows), scan_out);
      return 0;
    }

    if (*couple) {
      sg::ExperimentConfig cfg = couple_model.Config();
      cfg.trials = couple_trials;
      cfg.seed = couple_seed;
      const auto report =
          sg::CouplingCheck(cfg, couple_p1, couple_p2, couple_threads);
      std::cout << sg::FormatCouplingReport(cfg, couple_p1, couple_p2, report);
      return report.ok() ? 0 : kExitAssertion;
    }
  } catch (const sg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
  return 0;
}
