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

#ifndef HYPGRAPH_EXPERIMENTS_HPP
#define HYPGRAPH_EXPERIMENTS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypgraph/hyperbolicity.hpp"
#include "hypgraph/regime.hpp"

namespace hypgraph {

// One Monte Carlo trial. Every record must satisfy the diameter bound
// check; a violation aborts the run as an internal error.
struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;  // substream seed actually used
  Vertex n = 0;
  std::uint64_t m = 0;
  bool connected = true;
  int max_component_diameter = 0;
  int delta_doubled = 0;
  std::optional<std::array<Vertex, 4>> witness;
  bool bound_ok = false;
  double runtime_ms = 0.0;
};

// 95% Wilson score interval for a binomial frequency.
struct Wilson {
  double lo = 0.0;
  double hi = 0.0;
};
Wilson wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct DenseConfig {
  Vertex n = 0;
  double c = 0.0;  // p = 1 - 2c/n^2
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = library default
};

struct RegimeConfig {
  Vertex n = 0;
  std::optional<double> p;  // exactly one of p and d
  std::optional<double> d;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  HypAlgorithm algo = HypAlgorithm::kPruned;
  int threads = 0;
  double tau = 10.0;
};

struct ExperimentSummary {
  std::uint64_t trials = 0;
  std::map<int, std::uint64_t> delta_counts;  // doubled value -> count
  std::uint64_t other_count = 0;  // dense runs: doubled values above 2
  std::map<int, double> frequencies;
  double other_frequency = 0.0;
  std::map<int, Wilson> wilson;
  int modal_delta_doubled = 0;
  std::optional<DensePrediction> expected;       // dense runs
  double max_abs_deviation = 0.0;                // empirical vs expected
  std::optional<RegimePrediction> prediction;    // regime runs
  std::uint64_t trials_matching_prediction = 0;  // regime runs
  double wall_ms = 0.0;
  std::string csv;            // full per-trial CSV (schema below)
  std::uint64_t csv_hash = 0; // FNV-1a of the CSV minus the timing column
  std::string json_line;      // single-line summary object
};

// Per-trial CSV schema, bit-exact:
//   trial,seed,n,m,diameter,delta_doubled,witness_u,witness_v,witness_x,
//   witness_y,bound_ok,runtime_ms
// The diameter column carries the maximum per-component diameter (the
// per-component convention; it is finite even for disconnected trials).
// A missing witness writes -1 four times. Reruns of the same config are
// byte-identical except for the runtime_ms column, which is excluded
// from the determinism hash.
std::string trial_csv(const std::vector<TrialRecord>& records);
std::string strip_runtime_column(const std::string& csv);
std::uint64_t fnv1a64(const std::string& data);

// Theorem-side experiment at p = 1 - 2c/n^2: per-trial exact delta, and
// the empirical split over {0, 1/2, 1, other} against the limiting
// probabilities (e^-c, c e^-c, 1-(c+1)e^-c).
ExperimentSummary run_dense_experiment(const DenseConfig& cfg,
                                       std::vector<TrialRecord>* records = nullptr);

// Sparse-regime experiment at fixed (n, p) or (n, d); the summary holds
// the predictor's verdict and how many trials matched it.
ExperimentSummary run_regime_experiment(const RegimeConfig& cfg,
                                        std::vector<TrialRecord>* records = nullptr);

}  // namespace hypgraph

#endif  // HYPGRAPH_EXPERIMENTS_HPP
