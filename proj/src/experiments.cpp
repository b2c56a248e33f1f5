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

#include "hypgraph/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>

#include <json.hpp>

#include "hypgraph/rng.hpp"

namespace hypgraph {

namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// "0", "0.5", "1", ... for a doubled half-integer.
std::string half_string(int doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) s += ".5";
  return s;
}

TrialRecord run_one_trial(std::uint64_t trial, std::uint64_t master_seed,
                          Vertex n, double p, HypAlgorithm algo) {
  const auto t0 = Clock::now();
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = substream_seed(master_seed, trial);
  rec.n = n;

  const Graph g = gen_gnp({n, p, rec.seed});
  rec.m = g.edge_count();
  const DistanceMatrix dist = apsp(g);
  const std::vector<Vertex> comp = connected_components(g);
  const DiameterReport diam = diameter(dist, comp);
  rec.connected = diam.connected;
  rec.max_component_diameter = diam.max_component_diameter;

  const HypResult hyp = algo == HypAlgorithm::kNaive
                            ? hyperbolicity_naive(g, dist)
                            : hyperbolicity_pruned(g, dist);
  rec.delta_doubled = hyp.delta_doubled;
  rec.witness = hyp.witness;
  rec.bound_ok =
      check_delta_diameter_bound(rec.delta_doubled, rec.max_component_diameter);
  rec.runtime_ms = ms_since(t0);
  return rec;
}

std::vector<TrialRecord> run_trials(std::uint64_t trials,
                                    std::uint64_t master_seed, Vertex n,
                                    double p, HypAlgorithm algo, int threads) {
  if (threads > 0) omp_set_num_threads(threads);
  std::vector<TrialRecord> recs(trials);
  std::exception_ptr error;
  std::uint64_t error_trial = trials;
  std::mutex error_mutex;
  // Each trial owns its graph and matrix; with few trials the
  // parallelism lives inside apsp and the pruned scan instead.
  const bool across_trials =
      trials >= static_cast<std::uint64_t>(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic) if (across_trials)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    try {
      recs[static_cast<std::size_t>(t)] =
          run_one_trial(static_cast<std::uint64_t>(t), master_seed, n, p, algo);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (static_cast<std::uint64_t>(t) < error_trial) {
        error_trial = static_cast<std::uint64_t>(t);
        error = std::current_exception();
      }
    }
  }
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const CapacityError& e) {
      throw CapacityError(std::string(e.what()) + " [trial " +
                          std::to_string(error_trial) + ", seed " +
                          std::to_string(substream_seed(master_seed, error_trial)) +
                          "]");
    }
  }
  for (const TrialRecord& r : recs)
    if (!r.bound_ok)
      throw InternalError(
          "trial " + std::to_string(r.trial) + " (seed " +
          std::to_string(r.seed) + ") violates the diameter bound: 2*delta=" +
          std::to_string(r.delta_doubled) + " against diameter " +
          std::to_string(r.max_component_diameter));
  return recs;
}

void append_csv_row(std::string& out, const TrialRecord& r) {
  char buf[256];
  const auto w = r.witness.value_or(std::array<Vertex, 4>{});
  const long long wu = r.witness ? static_cast<long long>(w[0]) : -1;
  const long long wv = r.witness ? static_cast<long long>(w[1]) : -1;
  const long long wx = r.witness ? static_cast<long long>(w[2]) : -1;
  const long long wy = r.witness ? static_cast<long long>(w[3]) : -1;
  std::snprintf(buf, sizeof buf,
                "%llu,%llu,%u,%llu,%d,%d,%lld,%lld,%lld,%lld,%d,%.3f\n",
                static_cast<unsigned long long>(r.trial),
                static_cast<unsigned long long>(r.seed), r.n,
                static_cast<unsigned long long>(r.m),
                r.max_component_diameter, r.delta_doubled, wu, wv, wx, wy,
                r.bound_ok ? 1 : 0, r.runtime_ms);
  out += buf;
}

ordered_json wilson_json(const Wilson& w) {
  return ordered_json::array({w.lo, w.hi});
}

}  // namespace

Wilson wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw InputError("wilson_interval: no trials");
  constexpr double z = 1.959963984540054;  // 97.5th normal quantile
  const double nn = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = ph + z2 / (2.0 * nn);
  const double half =
      z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn));
  // The interval contains ph mathematically; keep that true under
  // floating-point rounding as well.
  const double lo = std::min((center - half) / denom, ph);
  const double hi = std::max((center + half) / denom, ph);
  return {std::max(0.0, lo), std::min(1.0, hi)};
}

std::string trial_csv(const std::vector<TrialRecord>& records) {
  std::string out =
      "trial,seed,n,m,diameter,delta_doubled,witness_u,witness_v,witness_x,"
      "witness_y,bound_ok,runtime_ms\n";
  for (const TrialRecord& r : records) append_csv_row(out, r);
  return out;
}

std::string strip_runtime_column(const std::string& csv) {
  std::string out;
  out.reserve(csv.size());
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string::npos) eol = csv.size();
    const std::size_t comma = csv.rfind(',', eol);
    const std::size_t cut = (comma == std::string::npos || comma < pos)
                                ? eol
                                : comma;
    out.append(csv, pos, cut - pos);
    out.push_back('\n');
    pos = eol + 1;
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

namespace {

// Counts, frequencies, Wilson intervals; shared by both experiment kinds.
void tabulate(ExperimentSummary& s, const std::vector<TrialRecord>& recs,
              bool dense_buckets) {
  s.trials = recs.size();
  if (dense_buckets)
    for (const int v : {0, 1, 2}) s.delta_counts[v] = 0;
  for (const TrialRecord& r : recs) {
    if (dense_buckets && r.delta_doubled > 2)
      ++s.other_count;
    else
      ++s.delta_counts[r.delta_doubled];
  }
  std::uint64_t modal_count = 0;
  for (const auto& [value, count] : s.delta_counts) {
    s.frequencies[value] =
        static_cast<double>(count) / static_cast<double>(s.trials);
    s.wilson[value] = wilson_interval(count, s.trials);
    if (count > modal_count) {
      modal_count = count;
      s.modal_delta_doubled = value;
    }
  }
  s.other_frequency =
      static_cast<double>(s.other_count) / static_cast<double>(s.trials);
  s.csv = trial_csv(recs);
  s.csv_hash = fnv1a64(strip_runtime_column(s.csv));
}

ordered_json distribution_json(const ExperimentSummary& s, bool dense_buckets) {
  ordered_json freq = ordered_json::object();
  for (const auto& [value, f] : s.frequencies) freq[half_string(value)] = f;
  if (dense_buckets) freq["other"] = s.other_frequency;
  return freq;
}

ordered_json wilson_map_json(const ExperimentSummary& s) {
  ordered_json w = ordered_json::object();
  for (const auto& [value, interval] : s.wilson)
    w[half_string(value)] = wilson_json(interval);
  return w;
}

}  // namespace

ExperimentSummary run_dense_experiment(const DenseConfig& cfg,
                                       std::vector<TrialRecord>* records) {
  if (cfg.n < 20) throw InputError("dense experiment: n must be at least 20");
  if (cfg.trials == 0) throw InputError("dense experiment: trials must be positive");
  if (!(cfg.c > 0.0)) throw InputError("dense experiment: c must be positive");
  const double nn = static_cast<double>(cfg.n);
  const double p = 1.0 - 2.0 * cfg.c / (nn * nn);
  if (!(p >= 0.0)) throw InputError("dense experiment: c too large for n");

  const auto t0 = Clock::now();
  std::vector<TrialRecord> recs = run_trials(cfg.trials, cfg.seed, cfg.n, p,
                                             HypAlgorithm::kPruned, cfg.threads);

  ExperimentSummary s;
  tabulate(s, recs, /*dense_buckets=*/true);
  s.expected = dense_probabilities(cfg.c);
  const double dev0 = std::abs(s.frequencies[0] - s.expected->p0);
  const double dev1 = std::abs(s.frequencies[1] - s.expected->p_half);
  const double dev2 = std::abs(s.frequencies[2] - s.expected->p1);
  s.max_abs_deviation = std::max({dev0, dev1, dev2});
  s.wall_ms = ms_since(t0);

  ordered_json j;
  j["config"] = {{"kind", "dense"}, {"n", cfg.n},     {"c", cfg.c},
                 {"p", p},          {"trials", cfg.trials},
                 {"seed", cfg.seed}, {"threads", cfg.threads}};
  j["trials"] = s.trials;
  j["empirical"] = distribution_json(s, true);
  j["expected"] = {{"0", s.expected->p0},
                   {"0.5", s.expected->p_half},
                   {"1", s.expected->p1}};
  j["wilson95"] = wilson_map_json(s);
  j["max_abs_deviation"] = s.max_abs_deviation;
  j["wall_ms"] = s.wall_ms;
  j["csv_fnv1a64"] = s.csv_hash;
  s.json_line = j.dump();
  s.json_line += '\n';

  if (records) *records = std::move(recs);
  return s;
}

ExperimentSummary run_regime_experiment(const RegimeConfig& cfg,
                                        std::vector<TrialRecord>* records) {
  if (cfg.n < 2) throw InputError("regime experiment: n must be at least 2");
  if (cfg.trials == 0)
    throw InputError("regime experiment: trials must be positive");
  if (cfg.p.has_value() == cfg.d.has_value())
    throw InputError("regime experiment: exactly one of p and d");
  const double p =
      cfg.p ? *cfg.p : *cfg.d / (static_cast<double>(cfg.n) - 1.0);
  if (!(p > 0.0 && p <= 1.0))
    throw InputError("regime experiment: p must lie in (0, 1]");

  const auto t0 = Clock::now();
  PredictOptions popts;
  popts.tau = cfg.tau;
  const RegimePrediction pred = predict(cfg.n, p, popts);

  std::vector<TrialRecord> recs =
      run_trials(cfg.trials, cfg.seed, cfg.n, p, cfg.algo, cfg.threads);

  ExperimentSummary s;
  tabulate(s, recs, /*dense_buckets=*/false);
  s.prediction = pred;
  for (const TrialRecord& r : recs) {
    bool match = false;
    if (pred.exact_delta_doubled)
      match = r.delta_doubled == *pred.exact_delta_doubled;
    else if (pred.interval_delta_doubled)
      match = r.delta_doubled >= pred.interval_delta_doubled->first &&
              r.delta_doubled <= pred.interval_delta_doubled->second;
    else if (pred.distribution)
      match = r.delta_doubled <= 2;
    if (match) ++s.trials_matching_prediction;
  }
  s.wall_ms = ms_since(t0);

  ordered_json j;
  j["config"] = {{"kind", "regime"},
                 {"n", cfg.n},
                 {"p", p},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed},
                 {"algo", algorithm_name(cfg.algo)},
                 {"threads", cfg.threads},
                 {"tau", cfg.tau}};
  j["trials"] = s.trials;
  j["empirical"] = distribution_json(s, false);
  j["modal_delta_doubled"] = s.modal_delta_doubled;
  j["case"] = regime_case_name(pred.regime);
  if (pred.exact_delta_doubled)
    j["predicted_delta_doubled"] = *pred.exact_delta_doubled;
  else if (pred.interval_delta_doubled)
    j["predicted_interval"] = ordered_json::array(
        {pred.interval_delta_doubled->first, pred.interval_delta_doubled->second});
  else if (pred.distribution)
    j["predicted_distribution"] = {{"0", pred.distribution->p0},
                                   {"0.5", pred.distribution->p_half},
                                   {"1", pred.distribution->p1}};
  else
    j["predicted_delta_doubled"] = nullptr;
  j["trials_matching_prediction"] = s.trials_matching_prediction;
  j["wilson95"] = wilson_map_json(s);
  j["wall_ms"] = s.wall_ms;
  j["csv_fnv1a64"] = s.csv_hash;
  s.json_line = j.dump();
  s.json_line += '\n';

  if (records) *records = std::move(recs);
  return s;
}

}  // namespace hypgraph
