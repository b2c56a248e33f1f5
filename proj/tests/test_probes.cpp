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

#include "fixtures.hpp"
#include "hypgraph/probes.hpp"

using namespace hypgraph;
using doctest::Approx;

namespace {

void check_internal_consistency(const ProbeReport& r) {
  std::uint64_t running = 0;
  for (int j = 0; j <= r.radius; ++j) {
    running += r.sphere_sizes[j];
    CHECK(r.ball_sizes[j] == running);
    if (j > 0) CHECK(r.ball_sizes[j] >= r.ball_sizes[j - 1]);
    if (r.is_tree_ball[j])
      for (int jj = 0; jj <= j; ++jj) CHECK(r.unique_parent_ok[jj]);
  }
  CHECK(r.left_size + r.right_size == r.sphere_sizes[r.radius]);
}

}  // namespace

TEST_CASE("probe on the complete binary tree of depth 3") {
  const Graph g = fixtures::complete_binary_tree(3);
  const ProbeReport r = probe_vertex(g, 0, 2);
  CHECK(r.sphere_sizes == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(r.ball_sizes == std::vector<std::uint64_t>{1, 3, 7});
  CHECK(r.is_tree_ball[2]);
  CHECK(r.unique_parent_ok[2]);
  CHECK(r.left_size == 2);
  CHECK(r.right_size == 2);
  check_internal_consistency(r);
}

TEST_CASE("probe on C6") {
  const Graph g = fixtures::cycle_graph(6);
  const ProbeReport r = probe_vertex(g, 0, 2);
  CHECK(r.sphere_sizes == std::vector<std::uint64_t>{1, 2, 2});
  CHECK(r.is_tree_ball[2]);
  CHECK(r.left_size == 1);
  CHECK(r.right_size == 1);
  check_internal_consistency(r);
}

TEST_CASE("probe on C4 sees the double parent at radius 2") {
  const Graph g = fixtures::cycle_graph(4);
  const ProbeReport r = probe_vertex(g, 0, 2);
  CHECK(r.sphere_sizes == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(r.unique_parent_ok[1]);
  CHECK_FALSE(r.unique_parent_ok[2]);
  CHECK_FALSE(r.is_tree_ball[2]);
  check_internal_consistency(r);
}

TEST_CASE("probes on trees are tree balls at every radius") {
  for (const Graph& g :
       {fixtures::random_tree(200, 4), fixtures::complete_binary_tree(4),
        fixtures::star_graph(30)}) {
    for (const Vertex v : {0u, 1u, 5u}) {
      const ProbeReport r = probe_vertex(g, v, 4);
      for (int j = 0; j <= 4; ++j) {
        CHECK(r.is_tree_ball[j]);
        CHECK(r.unique_parent_ok[j]);
      }
      check_internal_consistency(r);
    }
  }
}

TEST_CASE("probe with empty forbidden set matches BFS sphere counts") {
  const Graph g = gen_gnp({500, 0.01, 31});
  for (const Vertex v : {0u, 123u, 499u}) {
    const auto dist = bfs_distances(g, v);
    const ProbeReport r = probe_vertex(g, v, 3);
    for (int j = 0; j <= 3; ++j) {
      std::uint64_t count = 0;
      for (const auto dv : dist)
        if (dv == j) ++count;
      CHECK(r.sphere_sizes[j] == count);
    }
  }
}

TEST_CASE("forbidden vertices truncate the ball") {
  // P5 probed from the middle with one side cut off.
  const Graph g = fixtures::path_graph(5);
  const ProbeReport r = probe_vertex(g, 2, 2, {3});
  CHECK(r.sphere_sizes == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(r.is_tree_ball[2]);
  CHECK_THROWS_AS(probe_vertex(g, 2, 2, {2}), InputError);
  CHECK_THROWS_AS(probe_vertex(g, 2, 0), InputError);
}

TEST_CASE("expansion_survey on K5: sphere ratio exactly 1") {
  const Graph g = fixtures::complete_graph(5);
  SurveyConfig cfg;
  cfg.samples = 5;
  cfg.radius = 1;
  cfg.seed = 3;
  const SurveyResult res = expansion_survey(g, cfg);
  CHECK(res.mean_degree == Approx(4.0));
  CHECK(res.ratio_mean[1] == Approx(1.0));
  CHECK(res.ratio_sd[1] == Approx(0.0));
}

TEST_CASE("expansion_survey is deterministic and validates input") {
  const Graph g = gen_gnp({300, 0.02, 6});
  SurveyConfig cfg;
  cfg.samples = 20;
  cfg.radius = 2;
  cfg.seed = 9;
  const SurveyResult a = expansion_survey(g, cfg);
  const SurveyResult b = expansion_survey(g, cfg);
  CHECK(a.tree_ball_fraction == b.tree_ball_fraction);
  CHECK(a.ratio_mean == b.ratio_mean);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    CHECK(a.reports[i].vertex == b.reports[i].vertex);

  SurveyConfig bad = cfg;
  bad.samples = 301;
  CHECK_THROWS_AS(expansion_survey(g, bad), InputError);
}
