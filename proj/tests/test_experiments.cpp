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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "hypgraph/experiments.hpp"
#include "hypgraph/graph_io.hpp"

using namespace hypgraph;

TEST_CASE("save and load round-trip the graph") {
  const Graph g = fixtures::complete_graph(4);
  std::stringstream buf;
  save_graph(g, buf);
  CHECK(buf.str() ==
        "hypgraph v1\n4 6\n0 1\n0 2\n1 2\n0 3\n1 3\n2 3\n");
  const Graph back = load_graph(buf);
  CHECK(back.edge_count() == 6);
  for (Vertex v = 0; v < 4; ++v)
    for (Vertex u = 0; u < 4; ++u)
      CHECK(back.has_edge(u, v) == g.has_edge(u, v));
}

TEST_CASE("save then load is byte-identical for generated graphs") {
  const Graph g = gen_gnp({200, 0.07, 15});
  std::stringstream first;
  save_graph(g, first);
  std::stringstream second;
  save_graph(load_graph(first), second);
  CHECK(first.str() == second.str());
}

TEST_CASE("load_graph rejects malformed files") {
  const auto load_str = [](const std::string& s) {
    std::stringstream buf(s);
    return load_graph(buf);
  };
  CHECK_THROWS_AS(load_str(""), ParseError);
  CHECK_THROWS_AS(load_str("wrong header\n1 0\n"), ParseError);
  CHECK_THROWS_AS(load_str("hypgraph v1\n3\n"), ParseError);
  // u > v
  CHECK_THROWS_WITH_AS(load_str("hypgraph v1\n4 1\n3 1\n"),
                       "edge endpoints must satisfy u < v (line 3)",
                       ParseError);
  // m = 5 with 4 edge lines
  CHECK_THROWS_AS(
      load_str("hypgraph v1\n4 5\n0 1\n0 2\n1 2\n0 3\n"), ParseError);
  // out of range
  CHECK_THROWS_AS(load_str("hypgraph v1\n4 1\n0 4\n"), ParseError);
  // out of colex order
  CHECK_THROWS_AS(load_str("hypgraph v1\n4 2\n0 2\n0 1\n"), ParseError);
  // duplicate edge
  CHECK_THROWS_AS(load_str("hypgraph v1\n4 2\n0 1\n0 1\n"), ParseError);
  // double space
  CHECK_THROWS_AS(load_str("hypgraph v1\n4 1\n0  1\n"), ParseError);
  // trailing content
  CHECK_THROWS_AS(load_str("hypgraph v1\n4 1\n0 1\nx\n"), ParseError);
}

TEST_CASE("wilson intervals contain the point estimate") {
  for (const auto& [k, n] : {std::pair<std::uint64_t, std::uint64_t>{0, 10},
                             {1, 10},
                             {5, 10},
                             {10, 10},
                             {137, 3000}}) {
    const Wilson w = wilson_interval(k, n);
    const double ph = static_cast<double>(k) / static_cast<double>(n);
    CHECK(w.lo >= 0.0);
    CHECK(w.hi <= 1.0);
    CHECK(w.lo <= ph);
    CHECK(ph <= w.hi);
  }
  CHECK_THROWS_AS(wilson_interval(1, 0), InputError);
}

TEST_CASE("strip_runtime_column removes exactly the last field") {
  const std::string csv = "a,b,c\n1,2,3.25\n4,5,9.00\n";
  CHECK(strip_runtime_column(csv) == "a,b\n1,2\n4,5\n");
}

TEST_CASE("dense experiment: counts, invariants, reproducibility") {
  DenseConfig cfg;
  cfg.n = 60;
  cfg.c = 1.0;
  cfg.trials = 40;
  cfg.seed = 123;
  std::vector<TrialRecord> recs;
  const ExperimentSummary s = run_dense_experiment(cfg, &recs);
  CHECK(recs.size() == 40);
  CHECK(s.trials == 40);

  double freq_sum = s.other_frequency;
  for (const auto& [value, f] : s.frequencies) freq_sum += f;
  CHECK(freq_sum == doctest::Approx(1.0));
  for (const TrialRecord& r : recs) {
    CHECK(r.bound_ok);
    CHECK(r.seed == substream_seed(cfg.seed, r.trial));
  }
  REQUIRE(s.expected.has_value());
  CHECK(s.json_line.find("\"empirical\"") != std::string::npos);
  CHECK(s.json_line.back() == '\n');

  const ExperimentSummary again = run_dense_experiment(cfg);
  CHECK(again.csv_hash == s.csv_hash);
  CHECK(strip_runtime_column(again.csv) == strip_runtime_column(s.csv));
}

TEST_CASE("dense experiment input validation") {
  DenseConfig cfg;
  cfg.n = 60;
  cfg.c = 1.0;
  cfg.trials = 0;
  cfg.seed = 1;
  CHECK_THROWS_AS(run_dense_experiment(cfg), InputError);
  cfg.trials = 5;
  cfg.c = 0.0;
  CHECK_THROWS_AS(run_dense_experiment(cfg), InputError);
  cfg.c = 1.0;
  cfg.n = 10;
  CHECK_THROWS_AS(run_dense_experiment(cfg), InputError);
}

TEST_CASE("regime experiment thread-count invariance") {
  RegimeConfig cfg;
  cfg.n = 120;
  cfg.d = 20.0;
  cfg.trials = 12;
  cfg.seed = 5;
  std::uint64_t first_hash = 0;
  for (const int threads : {1, 2, 8}) {
    cfg.threads = threads;
    const ExperimentSummary s = run_regime_experiment(cfg);
    if (threads == 1)
      first_hash = s.csv_hash;
    else
      CHECK(s.csv_hash == first_hash);
  }
}

TEST_CASE("regime experiment validates config") {
  RegimeConfig cfg;
  cfg.n = 100;
  cfg.trials = 0;
  cfg.p = 0.2;
  cfg.seed = 1;
  CHECK_THROWS_AS(run_regime_experiment(cfg), InputError);
  cfg.trials = 3;
  cfg.d = 10.0;  // both p and d set
  CHECK_THROWS_AS(run_regime_experiment(cfg), InputError);
  cfg.p.reset();
  cfg.d.reset();
  CHECK_THROWS_AS(run_regime_experiment(cfg), InputError);
}

TEST_CASE("regime experiment matches the predictor on an easy case") {
  RegimeConfig cfg;
  cfg.n = 300;
  cfg.d = 100.0;  // case I at this size: j = 2, delta_doubled = 2
  cfg.trials = 10;
  cfg.seed = 77;
  std::vector<TrialRecord> recs;
  const ExperimentSummary s = run_regime_experiment(cfg, &recs);
  REQUIRE(s.prediction.has_value());
  CHECK(s.prediction->regime == RegimeCase::kI);
  CHECK(s.trials_matching_prediction == 10);
  CHECK(s.modal_delta_doubled == 2);
  for (const TrialRecord& r : recs) {
    REQUIRE(r.witness.has_value());
    CHECK(r.delta_doubled == 2);
  }
}

TEST_CASE("naive algo runs under the regime harness") {
  RegimeConfig cfg;
  cfg.n = 30;
  cfg.p = 0.3;
  cfg.trials = 6;
  cfg.seed = 2;
  cfg.algo = HypAlgorithm::kNaive;
  const ExperimentSummary s = run_regime_experiment(cfg);
  CHECK(s.trials == 6);
}

TEST_CASE("capacity errors carry the offending trial seed") {
  RegimeConfig cfg;
  cfg.n = 600;  // above the naive cap
  cfg.p = 0.01;
  cfg.trials = 2;
  cfg.seed = 4;
  cfg.algo = HypAlgorithm::kNaive;
  try {
    run_regime_experiment(cfg);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    const std::string what = e.what();
    CHECK(what.find("trial 0") != std::string::npos);
    CHECK(what.find(std::to_string(substream_seed(4, 0))) !=
          std::string::npos);
  }
}
