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

#ifndef HYPGRAPH_PROBES_HPP
#define HYPGRAPH_PROBES_HPP

#include <cstdint>
#include <vector>

#include "hypgraph/graph.hpp"

namespace hypgraph {

// Local neighborhood geometry around one vertex, from a truncated BFS in
// the graph induced on V minus a forbidden set. Everything is indexed by
// radius 0..r.
struct ProbeReport {
  Vertex vertex = 0;
  int radius = 0;
  std::vector<std::uint64_t> sphere_sizes;  // |S(v,j)|
  std::vector<std::uint64_t> ball_sizes;    // |N(v,j)| = running sum
  // Induced subgraph on N(v,j) is acyclic.
  std::vector<std::uint8_t> is_tree_ball;
  // Every vertex of S(v,j) has exactly one neighbor in S(v,j-1).
  std::vector<std::uint8_t> unique_parent_ok;
  // Split of S(v,r) by which half of N(v,1) its BFS ancestry runs
  // through; halves are formed by ascending vertex id, sizes within 1.
  // When the ball is not a tree the first-found BFS parent decides.
  std::uint64_t left_size = 0;
  std::uint64_t right_size = 0;
};

ProbeReport probe_vertex(const Graph& g, Vertex v, int radius,
                         const std::vector<Vertex>& forbidden = {});

struct SurveyConfig {
  std::uint64_t samples = 0;
  int radius = 1;
  std::uint64_t seed = 0;
  std::vector<Vertex> forbidden;
};

struct SurveyResult {
  double mean_degree = 0.0;  // 2m/n, the stand-in for d
  std::vector<ProbeReport> reports;
  // Over samples, sphere_sizes[j] / d^j for j = 1..radius.
  std::vector<double> ratio_mean;
  std::vector<double> ratio_sd;
  // Fraction of sampled vertices whose ball at the full radius is a tree.
  double tree_ball_fraction = 0.0;
};

// Probes `samples` distinct seeded-random vertices outside the forbidden
// set. Probes run in parallel; all aggregates are accumulated in sample
// order, so results are identical for every worker count.
SurveyResult expansion_survey(const Graph& g, const SurveyConfig& cfg);

}  // namespace hypgraph

#endif  // HYPGRAPH_PROBES_HPP
