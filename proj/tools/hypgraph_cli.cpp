// Copyright 2026 The hypgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypgraph/experiments.hpp"
#include "hypgraph/graph_io.hpp"
#include "hypgraph/json_io.hpp"

namespace {

using namespace hypgraph;

std::vector<Vertex> load_vertex_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Vertex> vs;
  std::uint64_t v = 0;
  while (in >> v) vs.push_back(static_cast<Vertex>(v));
  if (!in.eof()) throw InputError("non-numeric content in " + path);
  return vs;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw InputError("write failed: " + path);
}

// Config schema: {kind, n, p|d|c, trials, seed, algo, threads, tau};
// kind selects the experiment ("regime" or "dense").
ExperimentSummary run_from_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad config JSON: " + std::string(e.what()));
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "dense") {
      DenseConfig cfg;
      cfg.n = j.at("n").get<Vertex>();
      cfg.c = j.at("c").get<double>();
      cfg.trials = j.at("trials").get<std::uint64_t>();
      cfg.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
      return run_dense_experiment(cfg);
    }
    if (kind != "regime")
      throw InputError("config kind must be \"regime\" or \"dense\", got \"" +
                       kind + "\"");
    RegimeConfig cfg;
    cfg.n = j.at("n").get<Vertex>();
    if (j.contains("p")) cfg.p = j["p"].get<double>();
    if (j.contains("d")) cfg.d = j["d"].get<double>();
    cfg.trials = j.at("trials").get<std::uint64_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("algo")) {
      const std::string a = j["algo"].get<std::string>();
      if (a == "naive")
        cfg.algo = HypAlgorithm::kNaive;
      else if (a == "pruned")
        cfg.algo = HypAlgorithm::kPruned;
      else
        throw InputError("algo must be naive or pruned, got \"" + a + "\"");
    }
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("tau")) cfg.tau = j["tau"].get<double>();
    return run_regime_experiment(cfg);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad config JSON: " + std::string(e.what()));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Gromov hyperbolicity of graphs, with a G(n,p) lab"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) to an edge-list file");
  std::uint64_t gen_n = 0, gen_seed = 0;
  double gen_p = 0.0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--p", gen_p, "edge probability")->required();
  gen->add_option("--seed", gen_seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output path")->required();

  // delta
  auto* delta = app.add_subcommand("delta", "Exact hyperbolicity of a graph");
  std::string delta_in, delta_algo = "pruned";
  int delta_threads = 0;
  bool delta_witness = false, delta_json = false;
  delta->add_option("--in", delta_in, "edge-list file")->required();
  delta->add_option("--algo", delta_algo, "naive|pruned")
      ->check(CLI::IsMember({"naive", "pruned"}));
  delta->add_option("--threads", delta_threads, "worker threads");
  delta->add_flag("--witness", delta_witness, "print the witness quadruple");
  delta->add_flag("--json", delta_json, "JSON output");

  // diam
  auto* diam_cmd = app.add_subcommand("diam", "Exact diameter report");
  std::string diam_in;
  bool diam_json = false;
  diam_cmd->add_option("--in", diam_in, "edge-list file")->required();
  diam_cmd->add_flag("--json", diam_json, "JSON output");

  // predict
  auto* predict_cmd =
      app.add_subcommand("predict", "Regime prediction for (n, p)");
  std::uint64_t pred_n = 0;
  std::optional<double> pred_p, pred_d;
  double pred_tau = 10.0;
  bool pred_json = false;
  predict_cmd->add_option("--n", pred_n, "vertex count")->required();
  auto* popt = predict_cmd->add_option("--p", pred_p, "edge probability");
  auto* dopt = predict_cmd->add_option("--d", pred_d, "expected degree");
  popt->excludes(dopt);
  predict_cmd->add_option("--tau", pred_tau, "margin threshold");
  predict_cmd->add_flag("--json", pred_json, "JSON output");

  // probe
  auto* probe_cmd =
      app.add_subcommand("probe", "Neighborhood expansion survey");
  std::string probe_in, probe_forbidden;
  std::uint64_t probe_samples = 0, probe_seed = 0;
  int probe_radius = 1;
  probe_cmd->add_option("--in", probe_in, "edge-list file")->required();
  probe_cmd->add_option("--samples", probe_samples, "sampled vertices")
      ->required();
  probe_cmd->add_option("--radius", probe_radius, "probe radius")->required();
  probe_cmd->add_option("--seed", probe_seed, "sampling seed")->required();
  probe_cmd->add_option("--forbidden", probe_forbidden,
                        "file with vertex ids to exclude");

  // exp dense / exp regime
  auto* exp = app.add_subcommand("exp", "Monte Carlo experiments");
  exp->require_subcommand(1);
  auto* dense = exp->add_subcommand("dense", "p = 1 - 2c/n^2 experiment");
  DenseConfig dense_cfg;
  std::string dense_out;
  dense->add_option("--n", dense_cfg.n, "vertex count")->required();
  dense->add_option("--c", dense_cfg.c, "complement intensity")->required();
  dense->add_option("--trials", dense_cfg.trials, "trial count")->required();
  dense->add_option("--seed", dense_cfg.seed, "master seed")->required();
  dense->add_option("--threads", dense_cfg.threads, "worker threads");
  dense->add_option("--out", dense_out, "per-trial CSV path")->required();

  auto* regime = exp->add_subcommand("regime", "fixed (n, p|d) experiment");
  std::string regime_config, regime_out;
  regime->add_option("--config", regime_config, "JSON config file")
      ->required();
  regime->add_option("--out", regime_out, "per-trial CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*gen) {
    const Graph g = gen_gnp(
        {static_cast<Vertex>(gen_n), gen_p, gen_seed});
    save_graph(g, gen_out);
    std::cout << "wrote " << gen_out << ": n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";
  } else if (*delta) {
    if (delta_threads > 0) omp_set_num_threads(delta_threads);
    const Graph g = load_graph(delta_in);
    const HypResult r = delta_algo == "naive" ? hyperbolicity_naive(g)
                                              : hyperbolicity_pruned(g);
    if (delta_json) {
      std::cout << to_json_line(r, delta_witness);
    } else {
      std::cout << "delta_doubled=" << r.delta_doubled
                << " delta=" << half_decimal(r.delta_doubled)
                << " algorithm=" << algorithm_name(r.algorithm)
                << " pairs_scanned=" << r.pairs_scanned
                << " runtime_ms=" << r.runtime_ms << "\n";
      if (delta_witness) {
        if (r.witness) {
          const auto& w = *r.witness;
          std::cout << "witness=(" << w[0] << "," << w[1] << "," << w[2]
                    << "," << w[3] << ")\n";
        } else {
          std::cout << "witness=none\n";
        }
      }
    }
  } else if (*diam_cmd) {
    const Graph g = load_graph(diam_in);
    const DiameterReport r = diameter(g);
    if (diam_json) {
      std::cout << to_json_line(r);
    } else {
      if (r.diameter)
        std::cout << "diameter=" << *r.diameter << "\n";
      else
        std::cout << "diameter=inf max_component_diameter="
                  << r.max_component_diameter << "\n";
    }
  } else if (*predict_cmd) {
    if (!pred_p && !pred_d) throw InputError("predict: need --p or --d");
    const double p =
        pred_p ? *pred_p
               : *pred_d / (static_cast<double>(pred_n) - 1.0);
    PredictOptions opts;
    opts.tau = pred_tau;
    const RegimePrediction r = predict(static_cast<Vertex>(pred_n), p, opts);
    if (pred_json) {
      std::cout << to_json_line(r);
    } else {
      std::cout << "case=" << regime_case_name(r.regime) << " j=" << r.j
                << " i=" << r.i << " q=" << r.q;
      if (r.exact_delta_doubled)
        std::cout << " predicted_delta=" << half_decimal(*r.exact_delta_doubled);
      else if (r.interval_delta_doubled)
        std::cout << " predicted_delta=["
                  << half_decimal(r.interval_delta_doubled->first) << ","
                  << half_decimal(r.interval_delta_doubled->second) << "]";
      else if (r.distribution)
        std::cout << " predicted_distribution=(" << r.distribution->p0 << ","
                  << r.distribution->p_half << "," << r.distribution->p1
                  << ")";
      std::cout << (r.asymptotics_suspect ? " asymptotics_suspect" : "")
                << "\n";
    }
  } else if (*probe_cmd) {
    const Graph g = load_graph(probe_in);
    SurveyConfig cfg;
    cfg.samples = probe_samples;
    cfg.radius = probe_radius;
    cfg.seed = probe_seed;
    if (!probe_forbidden.empty())
      cfg.forbidden = load_vertex_list(probe_forbidden);
    const SurveyResult res = expansion_survey(g, cfg);
    for (const ProbeReport& r : res.reports) std::cout << to_json_line(r);
    std::cout << survey_json_line(cfg, res);
  } else if (*dense) {
    ExperimentSummary s = run_dense_experiment(dense_cfg);
    write_file(dense_out, s.csv);
    std::cout << s.json_line;
  } else if (*regime) {
    ExperimentSummary s = run_from_config(regime_config);
    write_file(regime_out, s.csv);
    std::cout << s.json_line;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hypgraph::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const hypgraph::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hypgraph::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
